import pytest

from qtchars.cartan import cartan_data, gamma_table
from qtchars.kl import chi_q, chi_qt
from qtchars.monomial import Monomial
from qtchars.serialize import dumps, element_to_obj, obj_to_element, render_text
from qtchars.torus import PointedElement

Y = Monomial.y


@pytest.mark.parametrize("fam,rank,m", [("A", 1, Y(1, 0) * Y(1, 2)), ("C", 3, Y(1, 0) * Y(3, 1))])
def test_roundtrip(fam, rank, m):
    g = gamma_table(cartan_data((fam, rank)))
    y = chi_qt(g, m)
    obj = element_to_obj(y)
    assert obj["terms"][0]["m"] == m.to_text()
    assert obj_to_element(obj) == y
    assert dumps(element_to_obj(obj_to_element(obj))) == dumps(obj)


def test_t1_and_text():
    g = gamma_table(cartan_data(("A", 1)))
    m = Y(1, 0) * Y(1, 2)
    obj = element_to_obj(chi_q(g, m), t1=True, top=m)
    assert [t["c"] for t in obj["terms"]] == [1, 1, 1]
    assert render_text(obj).splitlines()[0] == "1  Y[1,0]Y[1,2]"
    with pytest.raises(ValueError):
        element_to_obj(chi_qt(g, Y(1, 0, 2)), t1=True)
    text = render_text(element_to_obj(chi_qt(g, Y(1, 0, 2))))
    assert text.splitlines() == ["1  Y[1,0]^2", "(t + t^-1)  Y[1,0]Y[1,2]^-1", "1  Y[1,2]^-2"]


def test_signed_labels_kept():
    cd = cartan_data(("A", 3), labels=(-1, 0, 1))
    y = chi_qt(gamma_table(cd), Y(0, 0))
    obj = element_to_obj(y)
    assert obj["cartan"]["labels"] == [-1, 0, 1]
    back = obj_to_element(obj)
    assert isinstance(back, PointedElement) and back == y
