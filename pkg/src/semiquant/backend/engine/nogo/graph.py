from __future__ import annotations

from langgraph.graph import StateGraph, START, END

from semiquant.backend.core.constants import GRAPH_RECURSION_LIMIT, INDUCTION_STEPS, SEMIQUANT_LOGGER
from semiquant.backend.core.logger import get_logger
from semiquant.backend.engine.nogo.nodes import build_node, check_node, determine_node, should_continue
from semiquant.backend.engine.nogo.states import InductionState, NoGoReport
from semiquant.backend.engine.nogo.table import BracketTable

logger = get_logger(SEMIQUANT_LOGGER)


class NoGoGraph:
    """
    Runs the inductive constant-solving procedure as a state graph.

    Flow, once per step:
    1. build: add the step's table entries with one unknown each
    2. determine: solve the determining triple classes
    3. check: stack the check class, fix the constants or emit a certificate
    then either loop back to build or end.
    """

    def __init__(self):
        self.graph = self._build_graph()

    def _build_graph(self):
        graph = StateGraph(InductionState)

        graph.add_node("build_node", build_node)
        graph.add_node("determine_node", determine_node)
        graph.add_node("check_node", check_node)

        graph.add_edge(START, "build_node")
        graph.add_edge("build_node", "determine_node")
        graph.add_edge("determine_node", "check_node")
        graph.add_conditional_edges(
            "check_node",
            should_continue,
            {
                "build_node": "build_node",
                END: END,
            },
        )
        return graph.compile()

    def create_initial_state(self, steps: int) -> InductionState:
        return InductionState(
            steps=steps,
            step_index=0,
            table=BracketTable(),
            unknowns=[],
            determining=None,
            determining_solution=None,
            records=[],
            halted=False,
        )

    def run(self, steps: int) -> NoGoReport:
        if not 1 <= steps <= len(INDUCTION_STEPS):
            raise ValueError(f"steps must be in 1..{len(INDUCTION_STEPS)}, got {steps}")

        logger.info(
            f"🚀 Starting no-go induction with {steps} step(s)",
            extra={"component": "NoGoGraph", "event": "induction_start", "steps": steps},
        )
        try:
            final = self.graph.invoke(
                self.create_initial_state(steps),
                config={"recursion_limit": GRAPH_RECURSION_LIMIT},
            )
        except Exception as e:
            logger.error(
                "❌ No-go induction failed",
                extra={"component": "NoGoGraph", "event": "induction_error", "error": str(e)},
                exc_info=True,
            )
            raise

        report = NoGoReport(steps=steps, records=list(final["records"]))
        logger.info(
            f"🏁 No-go induction finished: {report.verdict}",
            extra={
                "component": "NoGoGraph",
                "event": "induction_end",
                "unknown_counts": report.unknown_counts,
            },
        )
        return report


def run_verification(steps: int = 4) -> NoGoReport:
    return NoGoGraph().run(steps)
