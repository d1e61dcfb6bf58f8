"""Degenerate drawings of outerplanar graphs using at most three edge lengths."""

from .bipoly import BiPoly, Monomial, poly_add, poly_eval, poly_mul_monomial
from .embedding import (
    Certificate,
    Placement,
    RhombusState,
    certify_injective,
    edge_class,
    embed_face_tree,
    embed_tstar,
    psi_closed_form,
    rhombus_child,
    rhombus_root,
)
from .graph import BlockDecomposition, Graph, GraphParseError, blocks, parse_graph
from .hstar import Corner, CornerRef, Label, QREncoding, is_proper, proper_encoding, qr_decode, qr_encode, ty
from .outerplanar import (
    DeltaTree,
    FaceTree,
    augment_biconnected,
    build_delta_tree,
    face_tree,
    is_outerplanar,
    pluck_check,
    triangulate_block,
)
from .pipeline import draw_graph, draw_tstar
from .realize import (
    Drawing,
    TorusParams,
    emit_json,
    emit_svg,
    parse_drawing_json,
    realize,
    sample_params,
    solve_params,
    verify_drawing,
)

__version__ = "0.1.0"
