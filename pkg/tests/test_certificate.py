import json
import pytest
from regweight import (CertificateError, Graph, WeightSet, check_certificate, load_certificate,
                       weight_with_set, write_certificate)
from regweight.certificate import loads_certificate
from regweight.graph6 import graph_digest


def test_round_trip(k4, tmp_path):
    cert = weight_with_set(k4, WeightSet.parse("-1,0,2"))
    assert cert.proper
    d = cert.to_dict()
    assert d["format"] == "regweight-certificate"
    assert d["version"] == 1
    assert d["graph"] == {"sha256": graph_digest(k4), "n": 4, "m": 6}
    assert d["weight_set"] == ["-1/1", "0/1", "2/1"]
    assert d["branch"] == "ascending"
    assert [(x["u"], x["v"]) for x in d["edges"]] == list(k4.edges)
    assert d["verdict"] == {"proper": True, "conflicts": 0}
    assert d["milestones"]

    file = tmp_path / "k4.json"
    write_certificate(cert, file)
    data = load_certificate(file)
    assert data.weights == cert.weights
    assert data.weight_set == cert.weight_set
    assert data.branch == "ascending"
    assert check_certificate(k4, data).is_proper


def test_tampered(k4):
    cert = weight_with_set(k4, WeightSet.parse("-1,0,2"))
    d = cert.to_dict()

    conflicting = json.loads(json.dumps(d))
    for item in conflicting["edges"]:
        item["w"] = "0/1"
    report = check_certificate(k4, loads_certificate(json.dumps(conflicting)))
    assert not report.is_proper
    assert report.count == 6

    outside = json.loads(json.dumps(d))
    outside["edges"][0]["w"] = "5/1"
    with pytest.raises(ValueError):
        check_certificate(k4, loads_certificate(json.dumps(outside)))

    short = json.loads(json.dumps(d))
    short["edges"].pop()
    with pytest.raises(CertificateError):
        loads_certificate(json.dumps(short))
    short["graph"]["m"] = 5
    with pytest.raises(CertificateError):
        check_certificate(k4, loads_certificate(json.dumps(short)))

    with pytest.raises(CertificateError):
        check_certificate(Graph(4, k4.edges[:5]), loads_certificate(json.dumps(d)))


def test_malformed():
    for text in ["not json", "[]", '{"format": "other"}',
                 '{"format": "regweight-certificate", "version": 2}',
                 '{"format": "regweight-certificate", "version": 1, "graph": {}}']:
        with pytest.raises(CertificateError):
            loads_certificate(text)
