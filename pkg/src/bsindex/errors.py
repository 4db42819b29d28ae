"""Exception and warning types shared across the package."""


class DegenerateGeometryError(RuntimeError):
    """Every cluster has zero geometric extent; no distribution can be formed."""

    def __init__(self, cluster_ids):
        self.cluster_ids = list(cluster_ids)
        super().__init__(
            "all clusters have zero geometric extent (cluster ids: %s)"
            % ", ".join(map(str, self.cluster_ids))
        )


class DegenerateRescaleError(RuntimeError):
    """Rescaling a rank-deficient cluster: a principal direction is undefined."""


class GenerationError(RuntimeError):
    """A synthetic dataset could not be realized within the retry budget."""


class CsvFormatError(ValueError):
    """CSV input rejected; carries 1-based line and column of the offense."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + where)


class EmptyClusterWarning(UserWarning):
    """A cluster id received zero members; it contributes zero weight."""


class DegenerateClusterWarning(UserWarning):
    """A cluster is empty or rank-deficient; its singular values are floored."""
