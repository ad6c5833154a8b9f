from pathlib import Path
from typing import Optional

from app.constants.trajectory import COMPARISON_FILE
from app.exceptions.config_exceptions import ConfigInvalidError
from app.services.plot_service import PlotMetric, PlotService

METRIC_CHOICES = {
    "exploitability": PlotMetric.EXPLOITABILITY,
    "max_regret": PlotMetric.MAX_REGRET,
    "max_isregret": PlotMetric.MAX_REGRET,
}


class PlotCommand:
    """
    Command to render a comparison table as a log-log convergence plot.
    """

    def __init__(self, plot_service: Optional[PlotService] = None):
        self.plot_service = plot_service or PlotService()

    def execute(
        self,
        comparison: Path,
        metric: str = "exploitability",
        out: Optional[Path] = None,
    ) -> Path:
        """
        Execute the command to plot one metric.

        Args:
            comparison: A comparison CSV, or a sweep directory containing one
            metric: ``exploitability`` or ``max_regret``
            out: Image path, ``<metric>.svg`` next to the table by default

        Returns:
            Path: The written image
        """
        if metric not in METRIC_CHOICES:
            raise ConfigInvalidError(
                f"unknown metric {metric!r}; choose exploitability or max_regret",
                ["metric"],
            )
        source = Path(comparison)
        if source.is_dir():
            source = source / COMPARISON_FILE
        if not source.is_file():
            raise ConfigInvalidError(f"no comparison table at {source}", ["comparison"])
        target = Path(out) if out is not None else source.with_name(f"{metric}.svg")
        return self.plot_service.render(source, target, METRIC_CHOICES[metric])
