from .utils import SchemaBuilder


def build():

    builder = SchemaBuilder()
    builder.add("identity", "STRING",
        description="registered name of the identity that was checked")
    builder.add("params", [], mode="NULLABLE",
        description="parameters of the check plus diagnostics such as `ratio` or "
                    "`printed_rel_err`; flattened to `param.<name>` columns in CSV")
    builder.add("lhs_re", "FLOAT", mode="NULLABLE",
        description="real part of the left-hand side")
    builder.add("lhs_im", "FLOAT", mode="NULLABLE",
        description="imaginary part of the left-hand side")
    builder.add("rhs_re", "FLOAT", mode="NULLABLE",
        description="real part of the right-hand side")
    builder.add("rhs_im", "FLOAT", mode="NULLABLE",
        description="imaginary part of the right-hand side")
    builder.add("abs_err", "FLOAT", mode="NULLABLE",
        description="|lhs - rhs|")
    builder.add("rel_err", "FLOAT", mode="NULLABLE",
        description="|lhs - rhs| / max(|lhs|, |rhs|, 1e-300)")
    builder.add("quad_error", "FLOAT",
        description="absolute quadrature error estimate, 0 when no integral is involved")
    builder.add("tolerance", "FLOAT",
        description="tolerance the check was held to")
    builder.add("status", "STRING",
        description="""One of:
    pass -> error within tolerance (absolute error when |lhs| < 1e-12, else relative)
    fail -> error above tolerance
    skipped -> precondition violated or numerical failure, see `params.reason`""")

    return builder.schema


def build_sweep():

    builder = SchemaBuilder()
    builder.add("r", "FLOAT", description="geodesic distance")
    builder.add("value_re", "FLOAT", description="real part of the kernel value")
    builder.add("value_im", "FLOAT", description="imaginary part of the kernel value")

    return builder.schema
