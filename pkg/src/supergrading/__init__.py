"""Good Z-gradings of gl(m|n) and osp(m|2n): pyramids, goodness, sl2-centralizers
and degree-labelled Dynkin diagrams, all in exact rational arithmetic."""

from .exactmat import RationalMatrix, kernel_basis, rank, solve
from .gradings import (EvenGradingPair, Grading, brute_force_good_gradings, extensions,
                       find_even_good_grading, good_gradings_from_pyramids, grading_from_h,
                       is_good, is_good_via_centralizer, restrict_to_even)
from .pyramids import (Pyramid, RowSpec, SuperPartition, canonical_labeling, dynkin_pyramid,
                       e_of, enumerate_pyramids, h_of, psi_order, render)
from .sl2cent import (Sl2Triple, build_osp_nilpotent, centralizer_e, centralizer_sl2,
                      complete_sl2_gl, gl_centralizer_dims, is_orthosymplectic,
                      osp_centralizer_dims, verify_sl2)
from .superalg import (BilinearFormSpec, Parity, SuperDim, SuperMatrix, ad_operator,
                       is_member_osp, osp_basis, standard_form, supercommutator, supertrace)
from .weylgroupoid import (LabeledDiagram, ParityWord, degree_function, equivalence_search,
                           odd_reflection, even_reflection, reflect_degree_map, same_grading)

__version__ = "0.1.0"
