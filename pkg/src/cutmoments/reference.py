"""Vertex/facet data of the reference elements and the face-overlap test.

Used to apply the full-boundary convention on the simplex-type elements, where
the recursions always produce the half value for an interface lying on a face.
"""

import itertools

TRIANGLE_FACETS = (
    ((0.0, 0.0), (0.0, 1.0)),
    ((0.0, 0.0), (1.0, 0.0)),
    ((1.0, 0.0), (0.0, 1.0)),
)

TETRAHEDRON_FACETS = (
    ((0.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0)),
    ((0.0, 0.0, 0.0), (1.0, 0.0, 0.0), (0.0, 0.0, 1.0)),
    ((0.0, 0.0, 0.0), (1.0, 0.0, 0.0), (0.0, 1.0, 0.0)),
    ((1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0)),
)

PRISM_FACETS = (
    ((0.0, 0.0, -1.0), (1.0, 0.0, -1.0), (0.0, 1.0, -1.0)),
    ((0.0, 0.0, 1.0), (1.0, 0.0, 1.0), (0.0, 1.0, 1.0)),
    ((0.0, 0.0, -1.0), (0.0, 1.0, -1.0), (0.0, 0.0, 1.0), (0.0, 1.0, 1.0)),
    ((0.0, 0.0, -1.0), (1.0, 0.0, -1.0), (0.0, 0.0, 1.0), (1.0, 0.0, 1.0)),
    ((1.0, 0.0, -1.0), (0.0, 1.0, -1.0), (1.0, 0.0, 1.0), (0.0, 1.0, 1.0)),
)


def hypercube_vertices(dim):
    return tuple(itertools.product((0.0, 1.0), repeat=dim))


VERTICES = {
    "triangle": ((0.0, 0.0), (1.0, 0.0), (0.0, 1.0)),
    "tetrahedron": ((0.0, 0.0, 0.0), (1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0)),
    "prism": tuple((x, y, z) for z in (-1.0, 1.0) for x, y in ((0.0, 0.0), (1.0, 0.0), (0.0, 1.0))),
}


def lies_on_facet(facets, normal, d):
    """True if every vertex of some facet satisfies ``normal . v + d == 0`` exactly."""
    for facet in facets:
        if all(sum(a * x for a, x in zip(normal, v)) + d == 0.0 for v in facet):
            return True
    return False
