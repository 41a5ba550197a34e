"""Grid-search benchmark harness.

Runs the models named in a benchmark spec over a CSV dataset with
GridSearchCV, evaluates each winner on a held-out split, and emits
metric reports in the wire format the modelsel selection loop consumes
(docs/metric_report.schema.json in the repository root). A companion
checker compares emitted reports against transcribed reference numbers
within stated tolerances.
"""

__version__ = "0.1.0"


class BenchError(ValueError):
    """Domain failure: bad spec values, unknown model, mismatched data."""
