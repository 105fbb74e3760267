"""Narrated saddle-move decomposition of one 12-crossing word.

Block size 3 splits the braid interior into three oriented summands.
Cut states price the saddles, mirror classes cancel in pairs, the
surviving summand and the remainder each take one extra saddle to
become knots, and crossing-halving on what is left finishes the
upper bound.  The signature gives the lower bound.
"""

from twobridge.cobordism import decompose, mirror, summand_class
from twobridge.diagram import signature
from twobridge.words import to_braid

WORD = "+--+-+-+--++-++-"
S = 3

print(f"word     {WORD}")
print(f"braid    {to_braid(WORD)}")
report = decompose(WORD, S)
print(f"blocks   s={report.s}  t={report.t}  r={report.r} "
      f"(c = s*t + r)")
print()

print("summands (start orientation : letters), with mirror partners")
for x in report.summands:
    cls = summand_class(x)
    print(f"  {x.serialize():<10} class {cls.key}  {cls.polarity}  "
          f"mirror {mirror(x).serialize()}")
print(f"cut states {report.cut_states} -> saddle costs sum to "
      f"{report.cut_saddles}")
print()

print(f"mirror cancellation leaves {len(report.residual)} class(es): "
      f"{list(report.residual)}")
print(f"link fixes: {report.link_fix_saddles} saddle(s) on summands, "
      f"{report.remainder_fix_saddles} on the remainder "
      f"{report.remainder_letters!r}")
total_saddles = (report.cut_saddles + report.link_fix_saddles
                 + report.remainder_fix_saddles)
print(f"total saddles {total_saddles} -> genus term {total_saddles // 2}")
print(f"residual crossings {report.residual_crossings} and "
      f"{report.remaining_remainder_crossings} remainder crossing(s) "
      "halve away")
print()

sigma = signature(WORD)
print(f"signature {sigma}  ->  g4 lower bound {abs(sigma) // 2}")
print(f"4-genus interval: [{report.g4_lower}, {report.g4_upper}]")
assert (report.g4_lower, report.g4_upper) == (1, 6)
