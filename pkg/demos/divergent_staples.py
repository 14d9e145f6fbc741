"""Walk through the classic divergent series and show every route that agrees."""
from regsum import dsl
from regsum.series import sum_series

# (expression, first index)
EXPRESSIONS = [
    ("1", 1), ("u", 1), ("2*u - 1", 1), ("(-1)^(u-1)", 1), ("(-1)^(u-1)*u", 1),
    ("(-1)^(u-1)*(2*u-1)", 1), ("2^u", 0), ("(-2)^u", 0), ("u^2 + 3*u - 1/2", 1), ("binom(-2,u)", 1),
]

for text, start in EXPRESSIONS:
    parsed = dsl.parse(text, dsl.Sum(start))
    r = sum_series(parsed.body)
    routes = ", ".join(f"{name}={value}" for name, value in r.routes)
    print(f"{text:20} from {start}  {type(parsed.body).__name__:14} {str(r.value):8} [{routes}]")
