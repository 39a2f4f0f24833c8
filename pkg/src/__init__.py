from src.election import (
    Election,
    RuleSpec,
    apply_shifts,
    is_unique_winner,
    winners,
)

from src.pricing import (
    INFINITY,
    AllOrNothingPrice,
    ListedPrice,
    UnitPrice,
)

from src.solvers import (
    BriberyInstance,
    Solution,
    margin,
    solve,
)

from src.oracle import (
    brute_force,
    verify,
)

from src.generators import (
    gen_clique,
    gen_mcis,
    gen_partition,
    gen_random,
)
