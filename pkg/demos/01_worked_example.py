"""Two generating sets of the same ideal, two different volumes.

The escape set at level e collects the exponent pairs (a, b) with
f_1^a f_2^b outside the e-th bracket power of the maximal ideal. Its
normalized size converges, but the limit depends on the chosen generators,
not just on the ideal they generate: (x, y^2) and (x, y^2 + x) both
generate the same ideal, yet the volumes come out 1/2 and 3/4.
"""

from frobvol import (
    Ideal,
    IdealSequence,
    PFamily,
    PolynomialRing,
    escape_set,
    volume_table,
)

R = PolynomialRing(2, ["x", "y"])
x, y = R.gens()
m = Ideal(R, [x, y])
fam = PFamily.frobenius(m)

seq_f = IdealSequence([Ideal(R, [x]), Ideal(R, [R.poly("y^2")])])
seq_g = IdealSequence([Ideal(R, [x]), Ideal(R, [R.poly("y^2+x")])])

print("escape-set sizes per level (p = 2, reference ideal m = (x, y)):")
print(f"{'e':>3} {'|V| for (x, y^2)':>18} {'|V| for (x, y^2+x)':>20}")
for e in range(1, 7):
    nf = escape_set(seq_f, fam, e).size
    ng = escape_set(seq_g, fam, e).size
    print(f"{e:>3} {nf:>18} {ng:>20}")

print()
print("the sets are exact staircases; level 2 of (x, y^2+x) has maximal points:")
print("   ", list(escape_set(seq_g, fam, 2).max_points))

print()
for label, seq in (("(x, y^2)", seq_f), ("(x, y^2+x)", seq_g)):
    table = volume_table(seq, fam, range(1, 7))
    values = ", ".join(str(v) for _, v in table.rows)
    note = table.flags.get("note", "")
    print(f"volume rows for {label}: {values}  {note}")

print()
print("every row is already the limit value here: 1/2 versus 3/4.")
