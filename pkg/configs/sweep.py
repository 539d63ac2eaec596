from hitchfib.config import LazyCall, LazyConfig
from hitchfib.evaluation import BranchCoverageEvaluator

run = LazyConfig.load_rel("common/run.py", "run")
evaluation = LazyConfig.load_rel("common/run.py", "evaluation")

run.command = "sweep"
run.samples = 50
evaluation.evaluators.append(LazyCall(BranchCoverageEvaluator)())
