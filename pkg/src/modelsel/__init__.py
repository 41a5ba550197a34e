"""Rule-based machine-learning model selection toolkit.

Subpackages:
    feature_model -- feature-tree DSL with cross-tree propositional constraints
    profiler      -- CSV ingestion and dataset profiling
    catalog       -- attribute table of candidate algorithms
    heuristics    -- recommendation engines (rule-derived and cheat-sheet)
    transition    -- iterative model-improvement state machine
    cli           -- command-line surface
"""

__version__ = "0.1.0"
