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

__all__ = ["plot_rank2", "separating_hyperplanes", "is_plottable"]

import itertools
import logging

import matplotlib
import numpy as np
from matplotlib.figure import Figure

from .affine_weyl import ExtAffWeylElement
from .alcove import Hyperplane, alcove_ge
from .errors import DatumMismatchError, PreconditionError
from .literals import format_element

log = logging.getLogger(__name__)

TOLERANCE = 1e-9


def is_plottable(datum):
    """Whether the datum has rank 2 or semisimple rank 2."""
    return datum.rank == 2 or datum.n_simple == 2


def separating_hyperplanes(x):
    """Root hyperplanes between the base alcove and ``x Delta``.

    Returns
    -------
    hyperplanes : `list` [`Hyperplane`]
        One per unit of length.
    """
    datum = x.datum
    found = []
    for a in datum.positive_roots:
        m = x.m_all[a]
        levels = range(0, m + 1) if m >= 0 else range(m + 1, 0)
        found += [Hyperplane(a, k) for k in levels]
    return found


def _plane(datum):
    """Basis of the drawing plane and the matrix taking coefficients to
    Euclidean picture coordinates."""
    if datum.rank == 2:
        basis = [(1, 0), (0, 1)]
    elif datum.n_simple == 2:
        basis = [datum.coroots[0], datum.coroots[1]]
    else:
        raise PreconditionError(f"{datum.label} is not of rank 2 or semisimple rank 2.")
    gram = np.array([[float(datum.inner(u, v)) for v in basis] for u in basis])
    return basis, np.linalg.cholesky(gram).T


def _polygon(halfplanes):
    """Vertices of ``{c : a . c >= b}`` for ``(a, b)`` in ``halfplanes``, in
    counterclockwise order."""
    vertices = []
    for (a1, b1), (a2, b2) in itertools.combinations(halfplanes, 2):
        matrix = np.array([a1, a2], dtype=float)
        if abs(np.linalg.det(matrix)) < TOLERANCE:
            continue
        point = np.linalg.solve(matrix, [b1, b2])
        if all(np.dot(a, point) >= b - TOLERANCE for a, b in halfplanes):
            if not any(np.allclose(point, v) for v in vertices):
                vertices.append(point)
    if len(vertices) < 3:
        return np.array(vertices)
    vertices = np.array(vertices)
    center = vertices.mean(axis=0)
    angles = np.arctan2(vertices[:, 1] - center[1], vertices[:, 0] - center[0])
    return vertices[np.argsort(angles)]


class _Canvas:
    def __init__(self, datum, window):
        self.datum = datum
        self.window = window
        self.basis, self.transform = _plane(datum)
        bound = 4.0 * (window + 1)
        self.box = [((1, 0), -bound), ((-1, 0), -bound), ((0, 1), -bound), ((0, -1), -bound)]
        self.box += [h for a in datum.positive_roots for h in self.strip(a, -window - 1, window + 1)]

    def covector(self, root):
        alpha = self.datum.roots[root]
        return tuple(float(self.datum.pairing(alpha, b)) for b in self.basis)

    def strip(self, root, low, high):
        a = self.covector(root)
        return [(a, low), (tuple(-c for c in a), -high)]

    def region(self, halfplanes):
        vertices = _polygon(self.box + halfplanes)
        return vertices.dot(self.transform.T) if len(vertices) else vertices

    def alcove(self, x):
        return self.region([h for a in self.datum.positive_roots for h in self.strip(a, x.m_all[a], x.m_all[a] + 1)])

    def line(self, hyperplane):
        points = self.region(self.strip(hyperplane.root, hyperplane.level, hyperplane.level))
        if len(points) < 2:
            return points
        first, second = max(
            itertools.combinations(range(len(points)), 2),
            key=lambda pair: np.linalg.norm(points[pair[0]] - points[pair[1]]),
        )
        return points[[first, second]]


def plot_rank2(datum, elements, out_path, vdatum=None, window=None):
    """Draw the alcoves of ``elements`` against the base alcove as SVG.

    Root hyperplanes ``<alpha, .> = k`` with ``|k| <= window`` are drawn
    thin, those separating the base alcove from an element's alcove thick.
    With ``vdatum``, the half-planes where alcoves are ``>=_alpha`` the base
    alcove are shaded for ``alpha`` in ``Phi_{v,+}``, and alcoves of
    elements that fail the P-alcove inequalities are outlined in red.

    Parameters
    ----------
    datum : `BasedRootDatum`
        A datum of rank 2 or semisimple rank 2.
    elements : `list` [`ExtAffWeylElement`]
    out_path : `str` or file-like
    vdatum : `VDatum`, optional
    window : `int`, optional
        Hyperplane range; large enough for every element when omitted.

    Raises
    ------
    PreconditionError
        If the datum cannot be drawn in the plane.
    DatumMismatchError
        If an element belongs to another datum.
    """
    if not is_plottable(datum):
        raise PreconditionError(f"{datum.label} is not of rank 2 or semisimple rank 2.")
    for x in elements:
        if x.datum != datum:
            raise DatumMismatchError(f"{format_element(x)} does not belong to {datum.label}.")
    if window is None:
        window = max([2] + [abs(m) + 1 for x in elements for m in x.m_all])
    canvas = _Canvas(datum, window)
    base = ExtAffWeylElement.identity(datum)

    figure = Figure(figsize=(6, 6))
    ax = figure.add_subplot()
    ax.set_aspect("equal")
    ax.set_axis_off()

    for a in datum.positive_roots:
        for level in range(-window, window + 1):
            segment = canvas.line(Hyperplane(a, level))
            if len(segment) >= 2:
                ax.plot(segment[:, 0], segment[:, 1], color="0.75", linewidth=0.5)

    if vdatum is not None:
        for r in sorted(vdatum.plus):
            edge = -1 if datum.is_positive(r) else 0
            a = canvas.covector(r)
            shade = canvas.region([(a, edge)])
            if len(shade) >= 3:
                ax.fill(shade[:, 0], shade[:, 1], color="tab:green", alpha=0.08, hatch="//", linewidth=0)

    region = canvas.alcove(base)
    ax.fill(region[:, 0], region[:, 1], color="tab:blue", alpha=0.5)
    ax.annotate("base", region.mean(axis=0), ha="center", va="center", fontsize=7)

    for x in elements:
        for hyperplane in separating_hyperplanes(x):
            segment = canvas.line(hyperplane)
            if len(segment) >= 2:
                ax.plot(segment[:, 0], segment[:, 1], color="tab:orange", linewidth=1.5)
        violated = vdatum is not None and not all(alcove_ge(x, base, r) for r in vdatum.plus)
        region = canvas.alcove(x)
        if len(region) < 3:
            log.warning(f"Alcove of {format_element(x)} lies outside the drawing window.")
            continue
        ax.fill(
            region[:, 0],
            region[:, 1],
            facecolor="tab:orange",
            alpha=0.5,
            edgecolor="red" if violated else "none",
            linewidth=2 if violated else 0,
        )
        ax.annotate(format_element(x), region.mean(axis=0), ha="center", va="center", fontsize=6)

    with matplotlib.rc_context({"svg.hashsalt": "fundalc"}):
        figure.savefig(out_path, format="svg", metadata={"Date": None})
    log.debug(f"Wrote picture of {len(elements)} elements of {datum.label}.")
