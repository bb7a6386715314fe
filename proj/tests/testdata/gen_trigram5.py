"""Writes trigram5.arpa: a normalized backoff trigram over a 5-word vocabulary.

Every stored n-gram is at least 1.5x more likely than its backoff estimate,
so the cheapest path through G always follows the stored n-grams.
"""
import math

VOCAB = ["a", "b", "c", "d", "e"]
PREDICTED = VOCAB + ["</s>"]
UNI = {"a": 0.25, "b": 0.2, "c": 0.2, "d": 0.15, "e": 0.1, "</s>": 0.1}
BIGRAMS = {
    "<s>": {"a": 1.8, "b": 1.5},
    "a": {"b": 1.9, "c": 1.5, "</s>": 1.7},
    "b": {"a": 1.6, "d": 2.0},
    "c": {"e": 2.5, "</s>": 1.5, "a": 1.5},
    "d": {"a": 1.5},
}
TRIGRAMS = {
    ("<s>", "a"): {"b": 1.5, "e": 1.6},
    ("a", "b"): {"d": 1.5, "c": 1.5},
    ("b", "d"): {"a": 1.5},
    ("c", "a"): {"</s>": 1.7},
}


def lg(x):
    return math.log10(x)


def main():
    bi = {}
    bi_bow = {}
    for h, boosts in BIGRAMS.items():
        probs = {w: k * UNI[w] for w, k in boosts.items()}
        assert sum(probs.values()) < 1
        bi_bow[h] = (1 - sum(probs.values())) / (1 - sum(UNI[w] for w in probs))
        bi[h] = probs

    def p_bi(h, w):
        if w in bi.get(h, {}):
            return bi[h][w]
        return bi_bow.get(h, 1.0) * UNI[w]

    tri = {}
    tri_bow = {}
    for (u, v), boosts in TRIGRAMS.items():
        probs = {w: k * p_bi(v, w) for w, k in boosts.items()}
        assert sum(probs.values()) < 1
        rest = 1 - sum(p_bi(v, w) for w in probs)
        tri_bow[(u, v)] = (1 - sum(probs.values())) / rest
        tri[(u, v)] = probs

    uni_lines = ["-99.000000\t<s>\t%.6f" % lg(bi_bow["<s>"])]
    for w in PREDICTED:
        line = "%.6f\t%s" % (lg(UNI[w]), w)
        if w in bi_bow:
            line += "\t%.6f" % lg(bi_bow[w])
        uni_lines.append(line)
    bi_lines = []
    for h in bi:
        for w, p in bi[h].items():
            line = "%.6f\t%s %s" % (lg(p), h, w)
            if (h, w) in tri_bow:
                line += "\t%.6f" % lg(tri_bow[(h, w)])
            bi_lines.append(line)
    tri_lines = []
    for (u, v) in tri:
        for w, p in tri[(u, v)].items():
            tri_lines.append("%.6f\t%s %s %s" % (lg(p), u, v, w))

    with open("trigram5.arpa", "w") as f:
        f.write("\\data\\\n")
        f.write("ngram 1=%d\nngram 2=%d\nngram 3=%d\n\n" %
                (len(uni_lines), len(bi_lines), len(tri_lines)))
        for k, lines in ((1, uni_lines), (2, bi_lines), (3, tri_lines)):
            f.write("\\%d-grams:\n" % k)
            f.write("\n".join(lines) + "\n\n")
        f.write("\\end\\\n")


if __name__ == "__main__":
    main()
