"""Walk the word model T(c) for small c and check the counting laws.

For each crossing number the enumerated count must equal the
Jacobsthal closed form, the palindromic subcount its own closed
form, and twice the knot count the sum of the two.
"""

from twobridge.words import (
    count_report,
    enumerate_palindromic_words,
    enumerate_words,
    is_palindromic,
)


def show_words(c):
    print(f"T({c}):")
    for word in enumerate_words(c):
        tag = "  palindromic" if is_palindromic(word) else ""
        print(f"  {word}{tag}")


for c in (3, 4, 5, 6, 7):
    show_words(c)

print()
print("c   |T(c)|  |T_p(c)|  knots   2*knots == |T|+|T_p|")
for c in range(3, 17):
    report = count_report(c)
    enumerated = sum(1 for _ in enumerate_words(c))
    pal = sum(1 for _ in enumerate_palindromic_words(c))
    assert enumerated == report.words
    assert pal == report.palindromes
    assert 2 * report.knots == report.words + report.palindromes
    print(f"{c:<3} {report.words:<7} {report.palindromes:<9} "
          f"{report.knots:<7} ok")
