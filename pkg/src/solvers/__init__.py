from src.solvers.approval import solve_k_approval
from src.solvers.base import BriberyInstance, Solution
from src.solvers.bucklin import solve_bucklin, solve_simplified_bucklin
from src.solvers.copeland import solve_copeland, solve_copeland_bnb, solve_copeland_fpt
from src.solvers.dispatch import margin, solve
from src.solvers.maximin import solve_maximin
from src.solvers.scoring import (
    solve_borda,
    solve_scoring,
    solve_scoring_unary_prices,
    solve_scoring_unary_scores,
)
