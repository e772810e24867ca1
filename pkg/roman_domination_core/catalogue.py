"""
Roman Domination Engine
Fixed reference instances (0-based element ids)
"""

from .graph import complete_bipartite_graph, complete_graph, petersen_graph
from .solver import SetCoverInstance

# Exact 3-Cover, q=2, t=4; the sets at 0 and 2 form the only cover
SPLIT_YES_X3C = SetCoverInstance.create(3, 2, [(0, 1, 3), (1, 2, 3), (2, 4, 5), (3, 4, 5)])
SPLIT_YES_COVER = (0, 2)

# Exact 3-Cover, q=2, t=4 with no cover
SPLIT_NO_X3C = SetCoverInstance.create(3, 2, [(0, 1, 2), (0, 3, 4), (0, 3, 5), (1, 4, 5)])

# Exact 4-Cover, l=1: the universe itself is the only set
GADGET_UNIT_X4C = SetCoverInstance.create(4, 1, [(0, 1, 2, 3)])
GADGET_UNIT_COVER = (0,)

# Exact 4-Cover, l=2, m=4; the sets at 0 and 3 form a cover
GADGET_YES_X4C = SetCoverInstance.create(4, 2, [(0, 1, 2, 3), (1, 3, 5, 6), (2, 4, 5, 6), (4, 5, 6, 7)])
GADGET_YES_COVER = (0, 3)

# Exact 4-Cover, l=2: every set contains element 0
GADGET_NO_X4C = SetCoverInstance.create(4, 2, [(0, 1, 2, 3), (0, 1, 4, 5), (0, 2, 6, 7)])


def cubic_sources() -> dict:
    """The 3-regular graphs the three-copy reduction is exercised on."""
    return {"K4": complete_graph(4), "K3,3": complete_bipartite_graph(3, 3), "Petersen": petersen_graph()}
