import json

import pytest

from chernmather.genus5 import divisibility_obstruction, genus5_hyperelliptic_report
from chernmather.prym import ChiTag, SCycle, euler_characteristic


def test_divisibility():
    assert not divisibility_obstruction(4, 14, 44)
    assert divisibility_obstruction(4, 14, 7)
    assert not divisibility_obstruction(4, 14, 92)
    with pytest.raises(ValueError):
        divisibility_obstruction(4, 0, 1)


def test_report_fields():
    r = genus5_hyperelliptic_report()
    assert r.dim_omega == 42
    assert r.lhs_multiplier == 4
    assert r.rhs_multiplier == 14
    assert r.candidate_loci == (SCycle((1, 2, 2), 2), SCycle((2, 3), 10))
    assert r.pairing_values == (((1, 2, 2), 44), ((2, 3), 92))
    assert r.verdicts == (((1, 2, 2), False, 2), ((2, 3), False, 1))
    assert r.excluded


def test_candidates_have_no_closed_form_chi():
    for locus in genus5_hyperelliptic_report().candidate_loci:
        assert euler_characteristic(locus).tag is ChiTag.EXTERNAL_REFERENCE


def test_report_is_byte_stable():
    a = json.dumps(genus5_hyperelliptic_report().to_json(), sort_keys=True)
    b = json.dumps(genus5_hyperelliptic_report().to_json(), sort_keys=True)
    assert a == b
    assert "citations" in json.loads(a)
