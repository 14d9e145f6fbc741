"""Compute B_k by every applicable method and show where the printed table disagrees."""
from regsum import bernoulli as bern

for k in range(0, 17):
    values = {m.value: bern.bernoulli(k, m) for m in bern.applicable_methods(k)}
    distinct = set(values.values())
    status = "agree" if len(distinct) == 1 else "DISAGREE"
    print(f"B_{k:<2} = {str(bern.bernoulli(k)):>12}  {len(values)} methods {status}")

for e in bern.table_mismatches():
    print(f"table entry B_{e.k} reads {e.printed}; computed {e.computed}")
