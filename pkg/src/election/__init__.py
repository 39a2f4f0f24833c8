from src.election.profile import (
    Election,
    ShiftVector,
    apply_shifts,
    pairwise_matrix,
    position,
)
from src.election.rules import (
    RuleSpec,
    bucklin_round,
    copeland_score,
    is_unique_winner,
    k_approval_score,
    majority_threshold,
    maximin_score,
    scoring_score,
    winners,
)
