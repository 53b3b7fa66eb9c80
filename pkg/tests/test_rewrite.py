"""Reduction, traces, compositions, closure checking."""

from fractions import Fraction
from random import Random

import pytest

from superlie import (
    LARGEST_LEFTMOST,
    SMALLEST_RIGHTMOST,
    Alphabet,
    Poly,
    RewriteRule,
    RewriteSystem,
    Word,
    assoc_compositions,
    deglex_key,
    enumerate_reduced_super_ls,
    is_gsb,
    is_reduced_word,
    lie_composition_len2,
    parse_poly,
    rank,
    reduce,
    scale,
    superbracket,
)
from conftest import random_poly

AXT = Alphabet.from_names(["a", "x", "t"])
ABXT = Alphabet.from_names(["a", "b", "x", "t"])


def system(alphabet, *texts):
    return RewriteSystem.from_polys(alphabet, [parse_poly(alphabet, s) for s in texts])


EX1_STYLE = system(AXT, "xa - ax", "ta - at - x")  # leading words xa, ta


# -- rules and systems -----------------------------------------------------------


def test_rule_is_normalized_monic():
    rule = RewriteRule(parse_poly(AXT, "2*xx - a"))
    assert rule.body == parse_poly(AXT, "xx - 1/2*a")
    assert str(rule.leading_word) == "xx"


def test_rule_rejects_zero_and_mixed_parity():
    with pytest.raises(ValueError):
        RewriteRule(Poly.zero(AXT))
    odd = Alphabet.from_names(["a", "x"], odd=["x"])
    with pytest.raises(ValueError):
        RewriteRule(parse_poly(odd, "xx - x"))


def test_system_rejects_duplicate_leading_words():
    with pytest.raises(ValueError):
        system(AXT, "xa - ax", "xa - a")


# -- reduced words ----------------------------------------------------------------


def test_is_reduced_examples():
    assert is_reduced_word(AXT.word("ttx"), EX1_STYLE)
    assert not is_reduced_word(AXT.word("txa"), EX1_STYLE)
    empty = RewriteSystem(AXT)
    assert is_reduced_word(AXT.word("txa"), empty)


# -- reduction --------------------------------------------------------------------


def test_rule_reduces_to_zero():
    for rule in EX1_STYLE.rules:
        normal_form, trace = reduce(rule.body, EX1_STYLE)
        assert normal_form.is_zero()
        assert len(trace) >= 1


def test_single_step_example():
    s = system(ABXT, "ta - x")
    normal_form, trace = reduce(Poly.monomial(ABXT.word("tab")), s)
    assert normal_form == Poly.monomial(ABXT.word("xb"))
    assert len(trace) == 1
    step = trace.steps[0]
    assert str(step.word) == "tab" and step.position == 0


def test_output_is_reduced_and_trace_replays():
    rng = Random(17)
    for _ in range(50):
        p = random_poly(rng, AXT)
        normal_form, trace = reduce(p, EX1_STYLE)
        assert all(is_reduced_word(w, EX1_STYLE) for w in normal_form.words())
        replayed, ideal_part = trace.replay(p, EX1_STYLE)
        assert replayed == normal_form
        assert p - normal_form == ideal_part
        assert trace.normal_form == normal_form


def test_trace_words_strictly_decrease_under_default_strategy():
    rng = Random(19)
    for _ in range(30):
        p = random_poly(rng, AXT)
        _, trace = reduce(p, EX1_STYLE)
        for s1, s2 in zip(trace.steps, trace.steps[1:]):
            assert deglex_key(s2.word) < deglex_key(s1.word)


def test_strategies_agree_on_closed_system():
    rng = Random(23)
    assert is_gsb(EX1_STYLE).passed
    for _ in range(50):
        p = random_poly(rng, AXT)
        nf_left, _ = reduce(p, EX1_STYLE, strategy=LARGEST_LEFTMOST)
        nf_right, _ = reduce(p, EX1_STYLE, strategy=SMALLEST_RIGHTMOST)
        assert nf_left == nf_right


def test_unknown_strategy_rejected():
    with pytest.raises(ValueError):
        reduce(Poly.zero(AXT), EX1_STYLE, strategy="bogus")


# -- compositions ------------------------------------------------------------------


def two_rules(alphabet, s, t):
    sys = system(alphabet, s, t)
    return sys.rules[0], sys.rules[1]


def test_single_letter_overlap():
    vyxz = Alphabet.from_names(["v", "z", "y", "x"])
    p, q = two_rules(vyxz, "xy - v", "yz - v")
    comps = assoc_compositions(p, q)
    assert [str(w) for w, _ in comps] == ["xyz"]
    word, comp = comps[0]
    # p*z - x*q with both rules monic
    z, x = Poly.generator(vyxz, "z"), Poly.generator(vyxz, "x")
    assert comp == p.body * z - x * q.body


def test_overlap_example_stable_letter_shape():
    p, q = two_rules(ABXT, "ta - at - x", "ab - b")
    comps = assoc_compositions(p, q)
    assert [str(w) for w, _ in comps] == ["tab"]


def test_disjoint_leading_words_have_no_composition():
    uvxyz = Alphabet.from_names(["u", "z", "y", "x"])
    p, q = two_rules(uvxyz, "xy - u", "zu - u")
    assert assoc_compositions(p, q) == []


def test_self_overlap():
    (p,) = system(AXT, "aa - x").rules
    comps = assoc_compositions(p, p)
    assert [str(w) for w, _ in comps] == ["aaa"]


def test_inclusion_composition():
    s = system(AXT, "ata - x", "t - a")
    p, q = s.rules[0], s.rules[1]
    comps = assoc_compositions(p, q)
    assert [str(w) for w, _ in comps] == ["ata"]
    word, comp = comps[0]
    a = Poly.generator(AXT, "a")
    assert comp == p.body - a * q.body * a


def test_is_gsb_empty_system_passes():
    report = is_gsb(RewriteSystem(AXT))
    assert report.passed and report.checks == ()


def test_is_gsb_broken_pair_fails_with_nonzero_normal_form():
    # frozen by hand: the xyz overlap of xy - v and yv - y reduces to v - vv
    vyx = Alphabet.from_names(["v", "y", "x"])
    s = system(vyx, "xy - v", "yv - y")
    report = is_gsb(s)
    assert not report.passed
    failures = report.failures()
    assert len(failures) == 1
    check = failures[0]
    assert str(check.word) == "xyv"
    assert check.normal_form == parse_poly(vyx, "v - vv")


def test_is_gsb_report_is_deglex_ordered_and_serializable():
    s = system(AXT, "aa - x", "xa - ax")
    report = is_gsb(s)
    words = [deglex_key(c.word) for c in report.checks]
    assert words == sorted(words)
    d = report.to_dict()
    assert set(d) == {"passed", "compositions"}
    assert all(set(c) == {"left", "right", "word", "normal_form", "passed"}
               for c in d["compositions"])


# -- reduced super-LS enumeration ---------------------------------------------------


def test_enumerate_reduced_super_ls_ex1_relations():
    words = enumerate_reduced_super_ls(EX1_STYLE, 2)
    assert [str(w) for w in words] == ["a", "x", "t", "tx"]
    words3 = [w for w in enumerate_reduced_super_ls(EX1_STYLE, 3) if len(w) == 3]
    assert sorted(str(w) for w in words3) == ["ttx", "txx"]


def test_enumerate_reduced_super_ls_empty_system():
    x_odd = Alphabet.from_names(["x"], odd=["x"])
    words = enumerate_reduced_super_ls(RewriteSystem(x_odd), 3)
    assert [str(w) for w in words] == ["x", "xx"]


def test_reduced_word_counts_match_quotient_dimensions():
    # graded dimensions of the quotient, computed by rank over reduce-images
    # of all words, must equal the reduced-word counts at each length
    from itertools import product as iproduct

    system = EX1_STYLE
    images, ranks_by_len = [], [0]
    for n in range(1, 5):
        for letters in iproduct(range(3), repeat=n):
            images.append(reduce(Poly.monomial(Word(AXT, letters)), system)[0])
        ranks_by_len.append(rank(images)[0])
    for n in range(1, 5):
        reduced_count = sum(
            1
            for letters in iproduct(range(3), repeat=n)
            if is_reduced_word(Word(AXT, letters), system)
        )
        assert ranks_by_len[n] - ranks_by_len[n - 1] == reduced_count


def test_fuzz_random_systems_sound_everywhere_confluent_when_closed():
    # random parity-homogeneous systems: reduction always terminates with
    # reduced output and an exactly replaying trace; the two strategies must
    # agree whenever the closure check passes, and with this seed the
    # non-closed regime produces at least one genuine divergence
    from fractions import Fraction as F

    rng = Random(2024)
    alphabets = [
        Alphabet.from_names(["a", "b"]),
        Alphabet.from_names(["a", "b"], odd=["b"]),
        Alphabet.from_names(["a", "b", "c"], odd=["a", "c"]),
    ]

    def random_hom_poly(alphabet, parity, max_terms, max_len):
        terms = []
        for _ in range(rng.randint(1, max_terms)):
            for _ in range(300):
                n = rng.randint(0, max_len)
                w = Word(
                    alphabet,
                    tuple(rng.randrange(len(alphabet)) for _ in range(n)),
                )
                if w.parity == parity:
                    break
            terms.append((w, F(rng.randint(-3, 3), rng.randint(1, 3))))
        return Poly(alphabet, terms)

    divergences = 0
    for _ in range(120):
        alphabet = rng.choice(alphabets)
        rules, leadings = [], set()
        for _ in range(rng.randint(1, 3)):
            p = random_hom_poly(alphabet, rng.randrange(2), 3, 3)
            if p.is_zero():
                continue
            lead = p.leading()[0]
            if not lead.letters or lead in leadings:
                continue
            leadings.add(lead)
            rules.append(RewriteRule(p))
        sys_ = RewriteSystem(alphabet, rules)
        closed = is_gsb(sys_).passed
        for _ in range(2):
            q = random_hom_poly(alphabet, rng.randrange(2), 4, 4)
            results = {}
            for strat in (LARGEST_LEFTMOST, SMALLEST_RIGHTMOST):
                nf, trace = reduce(q, sys_, strategy=strat)
                assert all(is_reduced_word(w, sys_) for w in nf.words())
                replayed, ideal = trace.replay(q, sys_)
                assert replayed == nf and q - nf == ideal
                results[strat] = nf
            if closed:
                assert results[LARGEST_LEFTMOST] == results[SMALLEST_RIGHTMOST]
            elif results[LARGEST_LEFTMOST] != results[SMALLEST_RIGHTMOST]:
                divergences += 1
    assert divergences > 0  # the non-closed regime is really exercised


def test_broken_table_fails_both_composition_routes():
    # a bracket table violating the Jacobi identity: [b,a]=a, [c,b]=b, [c,a]=0;
    # the associative closure check and the superbracket composition must
    # agree on the failure, with the same nonzero normal form
    abc = Alphabet.from_names(["a", "b", "c"])
    s = system(abc, "ba - ab - a", "cb - bc - b", "ca - ac")
    report = is_gsb(s)
    assert not report.passed
    assoc_forms = {str(c.normal_form) for c in report.failures()}
    comp = lie_composition_len2(
        s.rule_with_leading(abc.word("cb")),
        s.rule_with_leading(abc.word("ba")),
        abc.word("cba"),
    )
    lie_form, _ = reduce(comp, s)
    assert not lie_form.is_zero()
    assert str(lie_form) in assoc_forms


# -- superbracket compositions of length-2 leading words ------------------------------


def test_lie_composition_matches_hand_formula():
    vyxz = Alphabet.from_names(["v", "z", "y", "x"])
    p, q = two_rules(vyxz, "xy - v", "yz - v")
    w = vyxz.word("xyz")
    got = lie_composition_len2(p, q, w)
    z, x = Poly.generator(vyxz, "z"), Poly.generator(vyxz, "x")
    assert got == superbracket(p.body, z) - superbracket(x, q.body)


def test_lie_composition_absorbs_odd_square_normalization():
    # [g, a] - 1/2 [t, f] with f = [a,a] - ..., realized through monic rules
    odd = Alphabet.from_names(["a", "x", "t"], odd=["a", "t"])
    g = RewriteRule(parse_poly(odd, "ta + at - x"))
    f = RewriteRule(parse_poly(odd, "2*aa"))  # stored monic: aa
    w = odd.word("taa")
    got = lie_composition_len2(g, f, w)
    a, t = Poly.generator(odd, "a"), Poly.generator(odd, "t")
    f_full = parse_poly(odd, "2*aa")
    expected = superbracket(g.body, a) - scale(Fraction(1, 2), superbracket(t, f_full))
    assert got == expected


def test_lie_composition_shape_errors():
    p, q = EX1_STYLE.rules[0], EX1_STYLE.rules[1]  # leading xa, ta
    with pytest.raises(ValueError):
        lie_composition_len2(p, q, AXT.word("xata"))  # no single-letter overlap
    s = system(AXT, "xxa - a")
    with pytest.raises(ValueError):
        lie_composition_len2(s.rules[0], s.rules[0], AXT.word("xxaxa"))
