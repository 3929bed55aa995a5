"""
An admissible 23-colouring of K_14
==================================

Two 13-symbol words describe every non-star edge; stars are the Heawood
graph edges, each coloured uniquely.
"""

from mixramsey.admissibility import is_admissible, lemma_sweep, sigma, theorem_bound
from mixramsey.colouring import WordPair, expand_words, extract_words, format_mrc
from mixramsey.projective_plane import rotational_cycle

words = WordPair(2, "*001*1010100*", "*1010000*101*")
words.validate()
sc = expand_words(rotational_cycle(2), words)
c = sc.base

print(format_mrc(c))
rep = is_admissible(c, m=4)
print(rep.to_text())
print("special", sc.is_special(), "rotational", sc.is_rotational())
print("bound n^1.5 sqrt(2m) =", round(theorem_bound(14, 4), 2))

# forbidding monochromatic triangles instead is too strong for this colouring
print(is_admissible(c, m=3).to_text())

# colours private to the points/lines cut
split = sigma(c, range(0, 14, 2), range(1, 14, 2))
print("sigma", split.sigma, "<=", round(split.lemma_bound, 3))
qs = lemma_sweep(c, samples=200, seed=0)
print("random cuts holding:", sum(x.holds for x in qs), "/", len(qs))

# words come back out unchanged
print(extract_words(sc) == words)
