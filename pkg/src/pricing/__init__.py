from src.pricing.prices import (
    INFINITY,
    AllOrNothingPrice,
    Cost,
    ListedPrice,
    PriceFunction,
    UnitPrice,
    price,
    shift_costs,
    total_cost,
)
