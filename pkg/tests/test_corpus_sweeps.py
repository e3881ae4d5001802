"""Corpus-wide sweeps.  Marked slow; deselect with ``-m 'not slow'``."""

import pytest

from hopf_forge.corpus import CORPUS_LIMITS, corpus
from hopf_forge.deform import run_deformation
from hopf_forge.hopf_core import PbwHopfAlgebra, verify_hopf_axioms

pytestmark = pytest.mark.slow

SMALL = corpus(max_dimension=100)


def test_corpus_shape():
    full = corpus()
    assert len({d.datum_hash() for _, d in full}) == len(full)
    for _, d in full:
        assert d.group.order <= CORPUS_LIMITS["group_order"]
        assert d.theta <= CORPUS_LIMITS["theta"] and max(d.N) <= CORPUS_LIMITS["N"]
    assert [n for n, _ in corpus()] == [n for n, _ in full]
    assert any(d.lam for _, d in full) and any(any(m for m in d.mu) for _, d in full)


@pytest.mark.parametrize("name_datum", SMALL, ids=lambda nd: nd[0])
def test_presented_algebra_is_hopf(name_datum):
    _, d = name_datum
    assert verify_hopf_axioms(PbwHopfAlgebra(d)).passed


@pytest.mark.parametrize("name_datum", SMALL, ids=lambda nd: nd[0])
def test_every_lifting_is_a_deformation(name_datum):
    _, d = name_datum
    rep = run_deformation(d, round_trip=False)
    assert rep.passed, rep.to_dict()
