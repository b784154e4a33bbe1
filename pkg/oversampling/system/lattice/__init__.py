"""Full-rank rational lattices and their quotients."""
# Oversampling
from oversampling.system.lattice.lattice import Lattice  # noQA
from oversampling.system.lattice.operations import SmithBasis  # noQA
from oversampling.system.lattice.operations import Transversal  # noQA
from oversampling.system.lattice.operations import dual  # noQA
from oversampling.system.lattice.operations import exact_transversal  # noQA
from oversampling.system.lattice.operations import intersect  # noQA
from oversampling.system.lattice.operations import is_sublattice  # noQA
from oversampling.system.lattice.operations import lattice_sum  # noQA
from oversampling.system.lattice.operations import member  # noQA
from oversampling.system.lattice.operations import quotient_order  # noQA
from oversampling.system.lattice.operations import smith_basis  # noQA
