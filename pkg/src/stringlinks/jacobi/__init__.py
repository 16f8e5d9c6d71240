"""Jacobi diagram spaces on strands and circles, closure, and the diagrammatic action."""

from stringlinks.jacobi.diagrams import (
    CIRCLES,
    STRANDS,
    DiagramExpr,
    JacobiDiagram,
    Skeleton,
    canonicalize,
    chord,
    diagram_from_json,
    diagram_to_json,
    empty,
    expr_from_json,
    expr_to_json,
    format_diagram,
    format_expr,
    load_expr,
    parse_diagram,
    parse_expr,
    y_diagram,
)
from stringlinks.jacobi.space import (
    DiagramSpace,
    JacobiConfig,
    diagram_space,
    enumerate_basis,
    enumerate_diagrams,
    stu_relations,
)
from stringlinks.jacobi.action import (
    CovariantSpace,
    LinearOperator,
    StabilizerKernel,
    act_left,
    act_right,
    close,
    close_triple,
    closure_map,
    covariant_space,
    stack_multiply,
    tensor_identity,
    unit_action_kernel,
    unit_action_map,
)
