"""Named complexes shared across tests."""

from coveralg.complex_core import new_complex

K4BAR = new_complex(6, [(1, 2, 3), (1, 5, 6), (2, 4, 6), (3, 4, 5)])
K4BAR_DUAL_FACETS = {(1, 4), (2, 5), (3, 6), (1, 2, 3), (1, 5, 6), (2, 4, 6), (3, 4, 5)}
K4BAR_SUB = new_complex(6, [(1, 2, 3), (1, 5, 6), (3, 4, 5)])

CONE = new_complex(4, [(1, 2, 4), (2, 3, 4), (1, 3, 4)])
PATH_TREE = new_complex(5, [(1, 2, 3), (2, 3, 4), (4, 5)])
TRAMPOLINE = new_complex(6, [(4, 5, 6), (1, 4, 5), (2, 5, 6), (3, 4, 6)])

SQUARE = new_complex(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
TRIANGLE = new_complex(3, [(1, 2), (2, 3), (1, 3)])
EDGE = new_complex(2, [(1, 2)])
