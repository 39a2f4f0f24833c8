from src.generators.base import GeneratedInstance
from src.generators.clique import clique_bribery, gen_clique
from src.generators.graph import (
    Graph,
    find_clique,
    find_multicolored_independent_set,
    has_clique,
    is_multicolored_independent_set,
)
from src.generators.mcis import gen_mcis, mcis_bribery
from src.generators.partition import gen_partition
from src.generators.random_instances import gen_random
