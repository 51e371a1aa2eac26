"""Free-group words and presentation files.

Words are stored as reduced syllable lists; every product, inverse, and
power re-reduces eagerly, so two words are equal exactly when they are the
same element of the free group.
"""

from knotalex import Word, parse_presentation, parse_word

a = Word.generator("a")
w = Word.generator("w")

print("== building words ==")
word = w**2 * (a * w).inverse() * a
print(f"w^2 (a w)^-1 a  reduces to  {word}")
print(f"inverse: {word.inverse()}")
print(f"(a w)^3 = {(a * w) ** 3}")

print()
print("== parsing ==")
parsed = parse_word("w^2 (a w)^-1 a", generators="aw")
print(f"parse_word gives the same element: {parsed == word}")
commutator = parse_word("a w a^-1 w^-1", generators="aw")
print(f"commutator [a, w] = {commutator}")
print(f"  exponent sums: a -> {commutator.exponent_sum('a')}, "
      f"w -> {commutator.exponent_sum('w')}")

print()
print("== presentations ==")
TREFOIL = """\
# the trefoil knot group: two generators, one relator
gens: x y
rel: x y x (y x y)^-1
"""
presentation = parse_presentation(TREFOIL)
print("parsed and re-rendered in canonical form:")
print(presentation.to_text(), end="")
print(f"relator as a reduced word: {presentation.relators[0]}")
