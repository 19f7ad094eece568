import pytest

from frobaut.repdecomp import KernelActionSpec, PrimeComponentSpec


def make_spec(n, *components):
    """make_spec(15, (31, [(1, 1), (4, 1)])) -> KernelActionSpec"""
    return KernelActionSpec(n, tuple(PrimeComponentSpec(p, tuple(cons)) for p, cons in components))


# C_31^4 : C_15 with h = diag(w^r1, ..., w^r4) for the three choices of r below.
CASE1 = make_spec(15, (31, [(1, 1), (1, 1), (1, 1), (1, 1)]))
CASE2 = make_spec(15, (31, [(1, 1), (4, 1), (11, 1), (14, 1)]))
CASE3 = make_spec(15, (31, [(1, 1), (7, 1), (4, 1), (13, 1)]))

S3 = make_spec(2, (3, [(1, 1)]))
A4 = make_spec(3, (2, [(1, 1)]))
C2_4_C5 = make_spec(5, (2, [(1, 1)]))


@pytest.fixture
def spec_file(tmp_path):
    import json

    def write(spec_or_doc, name="spec.json"):
        doc = spec_or_doc.to_dict() if isinstance(spec_or_doc, KernelActionSpec) else spec_or_doc
        path = tmp_path / name
        path.write_text(json.dumps(doc) if not isinstance(doc, str) else doc, encoding="utf-8")
        return str(path)

    return write
