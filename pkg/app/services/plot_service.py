from collections import OrderedDict
from enum import Enum
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from app.config import Settings, get_settings  # noqa: E402
from app.constants.trajectory import COMPARISON_COLUMNS  # noqa: E402
from app.core.logging_config import get_logger  # noqa: E402
from app.exceptions.config_exceptions import SchemaMismatchError  # noqa: E402
from app.utils.csv_format import read_table  # noqa: E402


class PlotMetric(str, Enum):
    EXPLOITABILITY = "exploitability"
    MAX_REGRET = "max_isregret"


METRIC_AXIS_LABELS = {
    PlotMetric.EXPLOITABILITY: "exploitability",
    PlotMetric.MAX_REGRET: "max information-set regret",
}

Series = Dict[str, List[Tuple[float, float]]]


def load_series(path: Union[str, Path], metric: PlotMetric) -> Series:
    """Group a comparison table's (traversals, metric) points by label, keeping file order."""
    series: Series = OrderedDict()
    for number, row in enumerate(read_table(path, COMPARISON_COLUMNS), start=2):
        try:
            point = (float(row["traversals"]), float(row[metric.value]))
        except ValueError:
            raise SchemaMismatchError(f"{path}:{number}: non-numeric value")
        series.setdefault(row["label"], []).append(point)
    return series


class PlotService:
    def __init__(self, settings: Optional[Settings] = None):
        self.logger = get_logger("efpe")
        self.settings = settings or get_settings()

    def render(
        self,
        comparison: Union[str, Path],
        output: Union[str, Path],
        metric: PlotMetric = PlotMetric.EXPLOITABILITY,
    ) -> Path:
        """
        Draw one log-log curve per label of a comparison table.

        Values at or below zero are drawn at the plot floor and noted under the axes.

        :param comparison: Path to a comparison CSV written by a sweep.
        :param output: Image path; the suffix selects the format (``.svg``, ``.png``).
        :param metric: Column plotted against traversals.
        :return: The written image path.
        """
        series = load_series(comparison, metric)
        floor = self.settings.plot_floor
        floored = 0

        figure, axes = plt.subplots(figsize=(8, 5))
        try:
            for label, points in series.items():
                xs = [max(x, 1.0) for x, _ in points]
                ys = []
                for _, y in points:
                    if y <= 0.0:
                        floored += 1
                        y = floor
                    ys.append(y)
                if len(points) == 1:
                    axes.plot(xs, ys, marker="o", linestyle="", label=label)
                else:
                    axes.plot(xs, ys, label=label)
            axes.set_xscale("log")
            axes.set_yscale("log")
            axes.set_xlabel("traversals")
            axes.set_ylabel(METRIC_AXIS_LABELS[metric])
            if series:
                note = f"* values <= 0 drawn at {floor:g}" if floored else None
                axes.legend(loc="lower left", title=note)
            target = Path(output)
            target.parent.mkdir(parents=True, exist_ok=True)
            with plt.rc_context({"svg.fonttype": "none"}):
                figure.savefig(target)
        finally:
            plt.close(figure)

        self.logger.info(f"plotted {len(series)} series of {metric.value} to {target}")
        return target
