from hitchfib.config import LazyConfig

run = LazyConfig.load_rel("common/run.py", "run")
evaluation = LazyConfig.load_rel("common/run.py", "evaluation")

run.command = "classify"
