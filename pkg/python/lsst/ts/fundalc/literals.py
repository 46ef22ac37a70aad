# This file is part of ts_fundalc.
#
# Developed for the Vera Rubin Observatory Telescope and Site Systems.
# This product includes software developed by the LSST Project
# (https://www.lsst.org).
# See the COPYRIGHT file at the top-level directory of this distribution
# for details of code ownership.
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.

"""Element literals and JSON forms.

Grammar::

    elem   := factor ('*' factor)*
    factor := 't[' int (',' int)* ']' | 's' index | 'tau' index?

``s<i>`` is the i-th simple affine reflection (``s0`` is the affine one of
the first component, ``s1 ... sr`` the finite simple reflections) and
``tau<k>`` the k-th generator of Omega. Canonical literals read
``t[lambda]*s<i>*...`` with the finite part written as a reduced word.
"""

__all__ = [
    "parse_element",
    "format_element",
    "format_fraction",
    "format_vector",
    "parse_vector",
    "element_to_dict",
    "element_from_dict",
    "vdatum_to_dict",
    "newton_to_dict",
    "certificate_to_dict",
    "witness_to_dict",
]

import re
from fractions import Fraction

from .affine_weyl import ExtAffWeylElement, omega_generators, root_subsystem
from .errors import ElementSyntaxError

_TOKEN = re.compile(r"\s*(?:(?P<t>t\[(?P<vector>[^\]]*)\])|(?P<tau>tau(?P<gen>\d*))|(?P<s>s(?P<index>\d+)))\s*")
_INT = re.compile(r"\s*(-?\d+)\s*$")


def parse_element(literal, datum):
    """Parse an element literal.

    Parameters
    ----------
    literal : `str`
        For example ``"t[1,0]*s1"`` or ``"s1*s0"``.
    datum : `BasedRootDatum`
        Datum the element belongs to.

    Returns
    -------
    x : `ExtAffWeylElement`

    Raises
    ------
    ElementSyntaxError
        On a syntax error, an index out of range or a translation of the
        wrong arity; the message carries the position.
    """
    reflections = root_subsystem(datum).affine_simple
    element = ExtAffWeylElement.identity(datum)
    position = 0
    if not literal.strip():
        raise ElementSyntaxError("Empty element literal", literal, 0)
    while True:
        match = _TOKEN.match(literal, position)
        if match is None:
            raise ElementSyntaxError("Expected t[...], s<i> or tau<k>", literal, position)
        if match.group("t") is not None:
            start = match.start("vector")
            entries = match.group("vector").split(",")
            values = []
            for entry in entries:
                number = _INT.match(entry)
                if number is None:
                    raise ElementSyntaxError(f"Bad integer {entry.strip()!r}", literal, start)
                values.append(int(number.group(1)))
                start += len(entry) + 1
            if len(values) != datum.rank:
                raise ElementSyntaxError(
                    f"Translation has {len(values)} entries, {datum.label} needs {datum.rank}",
                    literal,
                    match.start("t"),
                )
            factor = ExtAffWeylElement.from_translation(datum, values)
        elif match.group("tau") is not None:
            generators = omega_generators(datum)
            index = int(match.group("gen") or 0)
            if index >= len(generators):
                raise ElementSyntaxError(
                    f"{datum.label} has {len(generators)} Omega generators", literal, match.start("tau")
                )
            factor = generators[index]
        else:
            index = int(match.group("index"))
            if index >= len(reflections):
                raise ElementSyntaxError(
                    f"{datum.label} has {len(reflections)} simple affine reflections", literal, match.start("s")
                )
            factor = reflections[index]
        element = element * factor
        position = match.end()
        if position == len(literal):
            return element
        if literal[position] != "*":
            raise ElementSyntaxError("Expected '*'", literal, position)
        position += 1


def format_element(x):
    """Canonical literal ``t[lambda]*s<i>*...``."""
    system = root_subsystem(x.datum)
    letters = [f"s{system.finite_letters[p]}" for p in x.finite.word]
    return "*".join([f"t[{','.join(str(c) for c in x.translation)}]"] + letters)


def format_fraction(value):
    """``"p/q"``, or ``"p"`` for integers."""
    return str(Fraction(value))


def format_vector(vector):
    return "(" + ",".join(format_fraction(c) for c in vector) + ")"


def parse_vector(text):
    """Parse ``"a,b,..."`` (entries may be ``p/q``) into `Fraction` entries."""
    text = text.strip().strip("()[]")
    try:
        return tuple(Fraction(entry.strip()) for entry in text.split(","))
    except (ValueError, ZeroDivisionError) as e:
        raise ElementSyntaxError(f"Bad vector: {e}", text, 0)


def element_to_dict(x):
    """``{"t": [...], "w_word": [...]}``; ``w_word`` uses literal indices."""
    system = root_subsystem(x.datum)
    return {"t": list(x.translation), "w_word": [system.finite_letters[p] for p in x.finite.word]}


def element_from_dict(data, datum):
    reflections = root_subsystem(datum).affine_simple
    element = ExtAffWeylElement.from_translation(datum, data["t"])
    for letter in data.get("w_word", []):
        element = element * reflections[letter]
    return element


def vdatum_to_dict(vd):
    if vd is None:
        return None
    return {
        "v": [format_fraction(c) for c in vd.v],
        "zero": sorted(vd.zero),
        "plus": sorted(vd.plus),
    }


def newton_to_dict(newton):
    return {
        "nu": [format_fraction(c) for c in newton.nu],
        "nu_dom": [format_fraction(c) for c in newton.nu_dom],
        "period": newton.period,
        "kappa": str(newton.kappa),
        "v_base": [format_fraction(c) for c in newton.v_base],
        "v_directions": [[format_fraction(c) for c in d] for d in newton.v_directions],
    }


def certificate_to_dict(certificate):
    return {
        "path": [
            {
                "s": step.letter,
                "from": format_element(step.source),
                "to": format_element(step.target),
                "kind": step.kind,
            }
            for step in certificate.path
        ],
        "minimal": element_to_dict(certificate.minimal),
        "x": element_to_dict(certificate.x),
        "J": list(certificate.J),
        "u": element_to_dict(certificate.u),
        "has_regular_point": certificate.has_regular_point,
    }


def witness_to_dict(witness):
    if witness is None:
        return None
    return {
        "v_datum": vdatum_to_dict(witness.v_datum),
        "found_at": format_element(witness.found_at),
        "found_v_datum": vdatum_to_dict(witness.found_v_datum),
        "path_length": len(witness.path),
    }
