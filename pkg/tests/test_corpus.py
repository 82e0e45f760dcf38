import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lrl_tagger.corpus import (
    Corpus,
    TaggedSentence,
    export_distribution_csv,
    normalize_parallel,
    parse_parallel,
    parse_two_column,
    read_corpus,
    serialize_two_column,
    split_train_test,
    tag_distribution,
)
from lrl_tagger.errors import DegenerateSplit, EmptyCorpus, LengthMismatch, MalformedLine


def test_empty_text_gives_empty_corpus():
    corpus = parse_two_column("")
    assert len(corpus) == 0
    assert corpus.token_count == 0
    assert corpus.tagset == ()


def test_two_sentences():
    corpus = parse_two_column("ghar\tNN\n\nwoh\tPRP\ngaya\tVM\n")
    assert len(corpus) == 2
    assert corpus.tagset == ("NN", "PRP", "VM")
    assert corpus.token_count == 3
    assert corpus.sentences[1].words == ("woh", "gaya")


def test_missing_delimiter_reports_line():
    with pytest.raises(MalformedLine) as err:
        parse_two_column("ghar NN")
    assert err.value.line_no == 1


def test_extra_delimiter_reports_line():
    with pytest.raises(MalformedLine) as err:
        parse_two_column("a\tB\n\nb\tC\tD\n")
    assert err.value.line_no == 3


def test_custom_delimiter_and_crlf():
    corpus = parse_two_column("a|X\r\nb|Y\r\n\r\n\r\nc|X\r\n", delimiter="|")
    assert [s.words for s in corpus] == [("a", "b"), ("c",)]
    assert serialize_two_column(corpus, "|") == "a|X\nb|Y\n\nc|X\n"


def test_no_trailing_newline():
    assert parse_two_column("a\tX").token_count == 1


def test_tagset_is_lexicographic_union():
    corpus = parse_two_column("z\tZ\n\na\tA\nm\tM\n")
    assert corpus.tagset == ("A", "M", "Z")


@pytest.mark.parametrize(
    "text, canonical",
    [
        ("a\tX\nb\tY\n\n\n\nc\tZ\n\n", "a\tX\nb\tY\n\nc\tZ\n"),
        ("a\tX", "a\tX\n"),
        ("\n\na\tX\n", "a\tX\n"),
    ],
)
def test_serialize_canonicalizes(text, canonical):
    assert serialize_two_column(parse_two_column(text)) == canonical


_token = st.text(alphabet=st.characters(blacklist_characters="\t\n\r", blacklist_categories=("Cs", "Zs", "Zl", "Zp", "Cc")), min_size=1, max_size=6)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.lists(st.tuples(_token, _token), min_size=1, max_size=6), max_size=6))
def test_round_trip(sentences):
    corpus = Corpus.from_pairs(sentences)
    text = serialize_two_column(corpus)
    assert parse_two_column(text) == corpus
    assert serialize_two_column(parse_two_column(text)) == text


def test_normalize_parallel():
    s = normalize_parallel("woh gaya", "PRP VM")
    assert s.words == ("woh", "gaya") and s.tags == ("PRP", "VM")


def test_normalize_parallel_mismatch():
    with pytest.raises(LengthMismatch) as err:
        normalize_parallel("woh gaya", "PRP")
    assert (err.value.n_left, err.value.n_right) == (2, 1)


def test_normalize_parallel_multiple_spaces():
    sentence_text, tag_text = "ek  hi   baat", "QC RP NN"
    # oracle: a plain whitespace split of both strings
    words = [w for w in sentence_text.replace("\t", " ").split(" ") if w]
    s = normalize_parallel(sentence_text, tag_text)
    assert list(s.words) == words == ["ek", "hi", "baat"]
    assert len(s.words) == len(s.tags) == 3


@settings(max_examples=100, deadline=None)
@given(st.lists(_token, min_size=1, max_size=8), st.lists(_token, min_size=1, max_size=8))
def test_normalize_parallel_never_misaligns(words, tags):
    try:
        s = normalize_parallel(" ".join(words), " ".join(tags))
    except LengthMismatch:
        assert len(words) != len(tags)
    else:
        assert len(s.words) == len(s.tags)


def test_parse_parallel_names_row():
    text = "woh gaya\tPRP VM\n\nek hi baat\tQC RP\n"
    with pytest.raises(LengthMismatch) as err:
        parse_parallel(text)
    assert err.value.line_no == 3
    assert "line 3" in str(err.value)


def test_parse_parallel():
    corpus = parse_parallel("woh gaya\tPRP VM\nghar\tNN\n")
    assert len(corpus) == 2 and corpus.token_count == 3


def test_read_corpus_formats(tmp_path):
    p = tmp_path / "p.txt"
    p.write_text("woh gaya\tPRP VM\n", encoding="utf-8")
    assert read_corpus(p, "parallel").token_count == 2
    with pytest.raises(ValueError):
        read_corpus(p, "xml")


def _corpus(n):
    return Corpus(tuple(TaggedSentence([f"w{i}"], ["T"]) for i in range(n)))


def test_split_ten():
    corpus = _corpus(10)
    train, test = split_train_test(corpus, 0.8, seed=3)
    assert (len(train), len(test)) == (8, 2)
    assert set(train.sentences).isdisjoint(test.sentences)
    assert set(train.sentences) | set(test.sentences) == set(corpus.sentences)


def test_split_two_sentences():
    assert math.floor(2 * 0.8) == 1
    train, test = split_train_test(_corpus(2), 0.8, seed=0)
    assert (len(train), len(test)) == (1, 1)


def test_split_deterministic():
    corpus = _corpus(50)
    assert split_train_test(corpus, 0.8, seed=7) == split_train_test(corpus, 0.8, seed=7)
    assert split_train_test(corpus, 0.8, seed=7) != split_train_test(corpus, 0.8, seed=8)


def test_split_degenerate():
    with pytest.raises(DegenerateSplit):
        split_train_test(_corpus(1), 0.8, seed=0)
    with pytest.raises(EmptyCorpus):
        split_train_test(Corpus(), 0.8, seed=0)
    with pytest.raises(ValueError):
        split_train_test(_corpus(5), 1.0, seed=0)


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 60), st.floats(0.05, 0.95), st.integers(0, 2**31))
def test_split_partition_property(n, fraction, seed):
    corpus = _corpus(n)
    k = math.floor(n * fraction)
    if k in (0, n):
        with pytest.raises(DegenerateSplit):
            split_train_test(corpus, fraction, seed)
        return
    train, test = split_train_test(corpus, fraction, seed)
    assert len(train) == k
    assert sorted(train.sentences + test.sentences, key=lambda s: int(s.words[0][1:])) == list(corpus.sentences)


def test_distribution_reference_supports():
    counts = {"1": 1265, "2": 513, "3": 622, "4": 1376, "5": 831}
    corpus = Corpus(tuple(TaggedSentence([f"w{t}"] * c, [t] * c) for t, c in counts.items()))
    dist = tag_distribution(corpus)
    assert dist.total == 4607
    assert dist.counts == counts
    share = dist.fractions["1"] + dist.fractions["4"]
    assert share == pytest.approx((1265 + 1376) / 4607)
    assert share == pytest.approx(0.5733, abs=5e-5)
    assert share > 0.5
    assert dist.top_share(2) == pytest.approx(share)


def test_distribution_single_and_counted():
    assert tag_distribution(Corpus((TaggedSentence(["a", "b"], ["NN", "NN"]),))).fractions == {"NN": 1.0}
    tags = ["A", "B", "B", "B"]
    dist = tag_distribution(Corpus((TaggedSentence(list("wxyz"), tags),)))
    assert dist.fractions == {t: tags.count(t) / len(tags) for t in set(tags)}
    assert dist.fractions == {"A": 0.25, "B": 0.75}


def test_distribution_empty():
    with pytest.raises(EmptyCorpus):
        tag_distribution(Corpus())


@settings(max_examples=50, deadline=None)
@given(st.lists(st.lists(st.sampled_from("ABCDEFG"), min_size=1, max_size=10), min_size=1, max_size=10))
def test_distribution_sums_to_one(tag_lists):
    corpus = Corpus(tuple(TaggedSentence(["w"] * len(t), t) for t in tag_lists))
    dist = tag_distribution(corpus)
    assert abs(sum(dist.fractions.values()) - 1.0) <= 1e-9
    assert all(c <= corpus.token_count for c in dist.counts.values())


def test_distribution_csv(tmp_path):
    corpus = Corpus((TaggedSentence(list("abcde"), ["B", "A", "B", "C", "A"]),))
    path = tmp_path / "d.csv"
    export_distribution_csv(tag_distribution(corpus), path)
    assert path.read_text().splitlines() == [
        "tag,count,fraction",
        "A,2,0.400000",
        "B,2,0.400000",
        "C,1,0.200000",
    ]


def test_sentence_invariants():
    with pytest.raises(ValueError):
        TaggedSentence([], [])
    with pytest.raises(ValueError):
        TaggedSentence(["a\tb"], ["X"])
    with pytest.raises(LengthMismatch):
        TaggedSentence(["a", "b"], ["X"])
