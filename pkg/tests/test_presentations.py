import pytest
from hypothesis import given, strategies as st

from pafiber.cell_complexes import (GroupPresentation, build_spine, phi_star_abelian_check,
                                    presentation_from_spine, twelve_generator_presentation)
from pafiber.cell_complexes.spine import (PHI_STAR, _table, ab_in_spine_generators, derived_two_cell_words,
                                          listed_spine_presentation, listed_two_cell_words, psi_star,
                                          spine_certificates)
from pafiber.cell_complexes.words import (abelianize, cyclic_normal_form, cyclic_reduce, free_reduce, inverse,
                                          substitute)

letters = st.integers(1, 4).flatmap(lambda g: st.sampled_from([g, -g]))
words = st.lists(letters, max_size=12).map(tuple)


@given(words)
def test_word_times_inverse_reduces_to_nothing(w):
    assert free_reduce(w + inverse(w)) == ()
    assert free_reduce(free_reduce(w)) == free_reduce(w)


@given(words, st.integers(0, 11))
def test_cyclic_normal_form_ignores_rotation_and_inversion(w, k):
    w = cyclic_reduce(w)
    if w:
        k %= len(w)
        assert cyclic_normal_form(w[k:] + w[:k]) == cyclic_normal_form(w)
        assert cyclic_normal_form(inverse(w)) == cyclic_normal_form(w)


@given(words, words)
def test_abelianization_is_a_homomorphism(u, v):
    a, b, c = abelianize(u, 4), abelianize(v, 4), abelianize(u + v, 4)
    assert c == tuple(x + y for x, y in zip(a, b))


@given(words)
def test_substitution_by_identity(w):
    assert substitute(w, {g: (g,) for g in range(1, 5)}) == free_reduce(w)


def test_parse_and_show():
    p = GroupPresentation(["a", "b"], [(1, 2, -1, -2)])
    assert p.word("a b^-1 a^2") == (1, -2, 1, 1)
    assert p.show((1, -2)) == "a b^-1"
    assert p.abelianization() == (2, [])


def test_spine_census():
    cx = build_spine()
    assert cx.census() == (6, 30, 35, 10)
    assert cx.euler() == 1


def test_derived_words_match_listed_up_to_rotation():
    derived = {cyclic_normal_form(w) for w in derived_two_cell_words().values()}
    listed = {cyclic_normal_form(w) for w in listed_two_cell_words()}
    assert derived == listed and len(listed) == 35


def test_presentations_abelianize_to_z4_power():
    big = presentation_from_spine()
    small = twelve_generator_presentation()
    assert len(big.generators) == 30 and len(big.relators) == 41
    assert len(small.generators) == 12 and len(small.relators) == 18
    assert big.abelianization() == (0, [4, 4, 4, 4])
    assert small.abelianization() == (0, [4, 4, 4, 4])
    assert listed_spine_presentation().abelianization() == (0, [4, 4, 4, 4])


def test_generator_change_is_onto():
    small = twelve_generator_presentation()
    big = presentation_from_spine()
    imgs = ab_in_spine_generators()
    assert small.induced_surjective(imgs, big)


def test_psi_star_preserves_relators():
    p = twelve_generator_presentation()
    assert {substitute(r, psi_star()) for r in p.relators} == set(p.relators)


def test_phi_star_tables_pass():
    assert all(c.ok for c in phi_star_abelian_check())
    assert all(c.ok for c in spine_certificates())


@pytest.mark.parametrize("corrupt", [lambda t: (3,), lambda t: t[3]])
def test_corrupted_phi_star_fails(corrupt):
    imgs = _table(PHI_STAR)
    imgs[1] = corrupt(imgs)                # a1 -> a3, or a1 -> phi(a3)
    (cert,) = phi_star_abelian_check(imgs)
    assert cert.status == "FAIL"
