import json

import pytest

from monolab.homology import basis_a, basis_b, fixed_subspace_dim
from monolab.johnson import (
    commutator_tau,
    content,
    is_primitive_quotient,
    reduce_to_quotient,
    saturate,
    tau_word,
    wedge3,
)
from monolab.scenarios import (
    CHAIN_TAU_SIGN,
    CurveTable,
    ScenarioValidationError,
    chain_factorization,
    chain_family,
    eta_matrix,
    family,
    mck,
    mck_factorization,
    torelli_f,
    twisted_mck,
    v_class,
    w_class,
    _f_word,
    _mck_vectors,
)
from monolab.words import TwistLetter, Word, sp_image, verify_factorization


def test_transcription_validates_for_all_desk_parameters():
    for g in range(2, 7):
        table = CurveTable("mck", g)
        assert all(ok for _, ok in table.checks)
    for g in range(2, 6):
        table = CurveTable("chain", g)
        assert all(ok for _, ok in table.checks)


def test_validation_catches_corruption():
    import monolab.scenarios as sc
    good = _mck_vectors(2)
    bad = [list(v) for v in good]
    bad[3][0] += 1
    original = sc._load_mck_vectors
    sc._load_mck_vectors = lambda g: bad if g == 2 else original(g)
    try:
        with pytest.raises(ScenarioValidationError):
            CurveTable("mck", 2)
    finally:
        sc._load_mck_vectors = original


def test_data_dir_override(tmp_path, monkeypatch):
    doc = {"schema": "monolab/1", "mck": {"2": {"B": _mck_vectors(2)}}}
    path = tmp_path / "mck_classes.json"
    path.write_text(json.dumps(doc))
    monkeypatch.setenv("MONOLAB_DATA", str(tmp_path))
    table = CurveTable("mck", 2)
    assert all(ok for _, ok in table.checks)
    # a corrupt override must abort with the violated constraint named
    doc["mck"]["2"]["B"][0][0] += 1
    path.write_text(json.dumps(doc))
    with pytest.raises(ScenarioValidationError):
        CurveTable("mck", 2)


def test_eta_matrix_properties():
    for g in (1, 2, 3, 4):
        eta = eta_matrix(g)
        assert (eta @ eta).is_identity()
        assert eta.is_symplectic()
        assert fixed_subspace_dim(eta) == 2 * g
        genus = 2 * g
        for i in range(1, genus + 1):
            assert eta.apply(basis_a(genus, i)) == -basis_a(genus, genus + 1 - i)
            assert eta.apply(basis_b(genus, i)) == -basis_b(genus, genus + 1 - i)


def test_mck_factorization_verifies():
    for g in (2, 3, 4):
        fact = mck_factorization(g)
        assert len(fact) == 4 * g + 4
        report = verify_factorization(fact)
        assert report["verdict"] == "PASS"
        half = Word(fact.letters[: 2 * g + 2], 2 * g)
        assert sp_image(half) == eta_matrix(g)


def test_mck_spec():
    spec = mck(2)
    assert spec.sections == (-1, -1, -1, -1)
    assert spec.hyperelliptic
    assert len(spec.cycles) == 12
    with pytest.raises(ValueError):
        mck(1)


def test_torelli_f_values():
    for g in (2, 3):
        table = CurveTable("mck", g)
        genus = 2 * g
        f = torelli_f(g, "mck")
        expected = reduce_to_quotient(
            wedge3(table.a[1], table.b[1], table.c[1])
            + wedge3(table.a[genus], table.b[genus], table.c[genus - 1])
        )
        assert tau_word(f) == expected
    for g in (3, 4):
        table = CurveTable("chain", g)
        f = torelli_f(g, "chain")
        assert tau_word(f) == reduce_to_quotient(
            wedge3(table.a[1], table.b[1], table.b[2])
        )


def test_torelli_f_literal_word_is_sp_trivial():
    for g in (2, 3):
        table = CurveTable("mck", g)
        assert sp_image(_f_word(table)).is_identity()
        assert sp_image(torelli_f(g, "mck").twist_word()).is_identity()


def test_twisted_mck_letters_equal_base():
    # the conjugator is Torelli, so the homology letters cannot move
    for g in (2, 3):
        base = mck(g)
        for n in (0, 1, 5):
            spec = twisted_mck(g, n)
            assert spec.cycles == base.cycles
            assert spec.sections == base.sections
    assert twisted_mck(2, 0).hyperelliptic
    assert not twisted_mck(2, 1).hyperelliptic


def test_f_power_fixes_letter_classes():
    g = 2
    table = CurveTable("mck", g)
    m = sp_image(_f_word(table).power(5))
    assert m.is_identity()
    assert m.apply(table.B[0]) == table.B[0]


def test_eta_action_example():
    g = 2
    table = CurveTable("mck", g)
    genus = 2 * g
    from monolab.johnson import sp_action_quotient
    lhs = sp_action_quotient(
        eta_matrix(g),
        reduce_to_quotient(wedge3(table.a[1], table.b[1], table.c[1])),
    )
    rhs = reduce_to_quotient(
        wedge3(table.a[genus], table.b[genus], table.c[genus - 1])
    )
    assert lhs == rhs


def test_v_class_primitive_and_linear():
    for g in (2, 3):
        v = v_class(g)
        assert is_primitive_quotient(v)
        table = CurveTable("mck", g)
        f = torelli_f(g, "mck")
        k = Word([TwistLetter(table.B[0])], 2 * g)
        for n in range(1, 9):
            assert commutator_tau(k, f, n) == n * v


def test_w_class_primitive_and_linear_up_to_recorded_sign():
    for g in (3, 4):
        w = w_class(g)
        assert is_primitive_quotient(w)
        table = CurveTable("chain", g)
        f = torelli_f(g, "chain")
        k4 = Word([TwistLetter(table.chain[4])], g)
        for n in range(1, 7):
            assert commutator_tau(k4, f, n) == (CHAIN_TAU_SIGN * n) * w
        # every other chain letter commutes with the twist at this level
        for i in (1, 2, 3, 5, 6):
            ki = Word([TwistLetter(table.chain[i])], g)
            assert commutator_tau(ki, f, 3).is_zero()


def test_chain_family_builds_and_verifies():
    fact = chain_factorization(3, 0)
    assert len(fact) == 12 * 3 * 7
    assert verify_factorization(fact)["verdict"] == "PASS"
    block = Word(fact.letters[: 6], 3)
    m = sp_image(block)
    power = m
    order = 1
    while not power.is_identity():
        power = power @ m
        order += 1
        assert order <= 14
    assert 14 % order == 0
    spec = chain_family(3, 2)
    assert spec.sections == (-3,)
    assert not spec.hyperelliptic
    with pytest.raises(ValueError):
        chain_family(2, 0)


def test_family_seed_lattices():
    fam = family("mck", 2)
    gens = fam.action_generators()
    for n in (1, 2, 3):
        seeds = fam.seed_classes(n)
        basis = saturate(seeds, gens)
        assert content(basis) == n
        # containment of n * v, and seeds are n times integer classes
        v = fam.witness_class()
        assert basis.member(tuple(n * x for x in v.coords))
        for s in seeds:
            assert all(c % n == 0 for c in s.coords)
    chain_fam = family("chain", 3)
    basis = saturate(chain_fam.seed_classes(2), chain_fam.action_generators())
    assert content(basis) == 2


def test_saturation_scaling_oracle():
    # closure at parameter n equals n times the closure at parameter one
    fam = family("mck", 2)
    gens = fam.action_generators()
    base = saturate(fam.seed_classes(1), gens)
    for n in (2, 5):
        scaled = saturate(fam.seed_classes(n), gens)
        assert scaled.rows == tuple(tuple(n * x for x in r) for r in base.rows)


def test_single_seed_orbit_lattice_content():
    # the orbit lattice of n*v alone already has content exactly n
    fam = family("mck", 2)
    gens = fam.action_generators()
    v = fam.witness_class()
    base = saturate([v], gens)
    assert content(base) == 1
    for n in (2, 3, 7):
        scaled = saturate([n * v], gens)
        assert content(scaled) == n
        assert scaled.rows == tuple(tuple(n * x for x in r) for r in base.rows)


def test_global_conjugation_of_base_by_twist():
    g = 2
    fact = mck_factorization(g)
    conj = _f_word(CurveTable("mck", g))
    from monolab.words import global_conjugation
    out = global_conjugation(fact, conj)
    assert sp_image(out.word) == fact.claimed_target
    assert out.letters == fact.letters


def test_mck_rejects_small_genus():
    with pytest.raises(ValueError):
        torelli_f(1, "mck")
    with pytest.raises(ValueError):
        twisted_mck(2, -1)
