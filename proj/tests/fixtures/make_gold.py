"""Writes the gold-standard evaluation fixtures.

Expected system outputs come from the offset oracle (tests/oracle) for words
that take the naive path, and are written by hand for the four tag-conditioned
words of the shipped fixture lexicon. Wrong rows are planted by listing only
an alternative that differs from the expected output. Deterministic.

    python3 tests/fixtures/make_gold.py
"""
import pathlib
import random
import sys

HERE = pathlib.Path(__file__).parent
sys.path.insert(0, str(HERE.parent / "oracle"))
from offset_oracle import naive  # noqa: E402

# word -> Hindi translation (reference column)
NAIVE_WORDS = {
    "પાણી": "पानी", "છોકરો": "लड़का", "શાળા": "पाठशाला", "પુસ્તક": "पुस्तक", "ગુજરાત": "गुजरात",
    "ભારત": "भारत", "નદી": "नदी", "સૂરજ": "सूरज", "ચંદ્ર": "चंद्र", "દિવસ": "दिवस", "રાત": "रात",
    "માણસ": "आदमी", "કામ": "काम", "નામ": "नाम", "દેશ": "देश", "ગામ": "गाँव", "શહેર": "शहर",
    "ઝાડ": "पेड़", "ફળ": "फल", "દૂધ": "दूध", "મને": "मुझे", "આપી": "दी", "એક": "एक",
}
# tag-conditioned words: (expected output, reference translation)
TAGGED = {
    "રામે": ("राम ने", "राम ने"),
    "ઘરે": ("घर पर", "घर पर"),
    "રશ્મીએ": ("रश्मी ने", "रश्मी ने"),
    "ચાલીએ": ("चालें", "चलें"),
}
# A plausible but wrong rendering per word, used for planted errors.
WRONG = {"રામે": "रामे", "ઘરે": "घरे", "રશ્મીએ": "रश्मीए", "ચાલીએ": "चलें"}


def expected_output(word):
    return TAGGED[word][0] if word in TAGGED else naive(word)


def reference(word):
    return TAGGED[word][1] if word in TAGGED else NAIVE_WORDS[word]


def wrong_alternative(word):
    return WRONG.get(word, naive(word) + "ा")


def write(name, rows, sentence_len, header):
    """rows: list of (word, planted_wrong)"""
    lines = [f"# {header}", "# source<TAB>reference_translation<TAB>acceptable|alternatives"]
    same = wrong = 0
    for i, (word, planted) in enumerate(rows):
        if i and i % sentence_len == 0:
            lines.append("")
        out = expected_output(word)
        alts = [wrong_alternative(word)] if planted else [out]
        if not planted and word not in TAGGED and word in ("પાણી", "શહેર"):
            alts.append(reference(word))  # a second acceptable spelling
        lines.append(f"{word}\t{reference(word)}\t{'|'.join(alts)}")
        same += out == reference(word)
        wrong += planted
    (HERE / name).write_text("\n".join(lines) + "\n", encoding="utf-8")
    sentences = (len(rows) + sentence_len - 1) // sentence_len
    return sentences, len(rows), same, wrong


def main():
    rng = random.Random(77)
    vocab = sorted(NAIVE_WORDS) + sorted(TAGGED)
    words = [rng.choice(vocab) for _ in range(200)]
    planted = set(rng.sample(range(200), 14))
    counts = write("gold_200.tsv", [(w, i in planted) for i, w in enumerate(words)], 10,
                   "desk-scale gold set, 200 tokens, 14 planted wrong")
    with open(HERE / "gold_200.expected", "w", encoding="utf-8") as f:
        for key, value in zip(["sentences", "words", "same", "wrong"], counts):
            f.write(f"{key}\t{value}\n")
    print("gold_200", counts)

    ten = ["રામે", "મને", "પુસ્તક", "આપી", "ઘરે", "એક", "ફળ", "રશ્મીએ", "ચાલીએ", "નદી"]
    print("gold_10_one_wrong", write("gold_10_one_wrong.tsv", [(w, w == "ફળ") for w in ten], 5, "one planted wrong"))
    print("gold_all_right", write("gold_all_right.tsv", [(w, False) for w in ten], 5, "all acceptable"))


if __name__ == "__main__":
    main()
