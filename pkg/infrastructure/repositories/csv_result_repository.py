"""
CSV implementation of ResultRepository.

Tables are written with pandas using 17 significant digits, so every
float survives a write/read cycle unchanged. Comparison reports are
written as JSON.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Mapping, Sequence

import numpy as np
import pandas as pd

from backend.core.exceptions import ExportError
from core.entities.ensemble_stats import STATISTICS, EnsembleStats
from core.entities.reports import ComparisonReport, MemoryEstimate
from core.entities.trajectory import Trajectory
from core.value_objects.scenario import Scenario
from core.value_objects.state_vector import COMPARTMENTS
from interfaces.repositories.result_repository import PathLike, ResultRepository

logger = logging.getLogger(__name__)

SEPARATORS = {'csv': ',', 'tsv': '\t'}
FLOAT_FORMAT = '%.17g'
TRAJECTORY_COLUMNS = ('t',) + COMPARTMENTS + ('total_naive',)


def ensemble_columns() -> List[str]:
    """Column order of ensemble tables."""
    columns = ['t']
    for name in COMPARTMENTS:
        columns.extend(f"{name}_{stat}" for stat in STATISTICS)
    columns.append('total_naive_mean')
    return columns


class CsvResultRepository(ResultRepository):
    """
    Delimited-text implementation of ResultRepository.

    Args:
        output_format: Column separator selector, ``csv`` or ``tsv``
    """

    def __init__(self, output_format: str = 'csv'):
        if output_format not in SEPARATORS:
            raise ValueError(f"Unknown output format {output_format!r}; expected one of {sorted(SEPARATORS)}")
        self.output_format = output_format
        self.separator = SEPARATORS[output_format]

    def _write_frame(self, frame: pd.DataFrame, path: PathLike) -> Path:
        path = Path(path)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            frame.to_csv(
                path,
                sep=self.separator,
                index=False,
                float_format=FLOAT_FORMAT,
                lineterminator='\n',
            )
        except OSError as e:
            logger.error(f"Error writing {path}: {str(e)}")
            raise ExportError(path, e)
        logger.info(f"Wrote {len(frame)} rows to {path}")
        return path

    def _read_frame(self, path: PathLike) -> pd.DataFrame:
        path = Path(path)
        try:
            return pd.read_csv(path, sep=self.separator, float_precision='round_trip')
        except (OSError, ValueError) as e:
            logger.error(f"Error reading {path}: {str(e)}")
            raise ExportError(path, e)

    def save_trajectory(self, trajectory: Trajectory, path: PathLike) -> Path:
        values = trajectory.values()
        frame = pd.DataFrame(values, columns=list(COMPARTMENTS))
        frame.insert(0, 't', trajectory.times())
        frame['total_naive'] = values[:, 0] + values[:, 1]
        return self._write_frame(frame, path)

    def load_trajectory(self, path: PathLike, scenario: Scenario, engine: str) -> Trajectory:
        frame = self._read_frame(path)
        missing = [c for c in ('t',) + COMPARTMENTS if c not in frame.columns]
        if missing:
            raise ExportError(path, ValueError(f"missing columns {missing}"))
        values = frame[list(COMPARTMENTS)].to_numpy(dtype=float)
        return Trajectory.from_arrays(engine, scenario, frame['t'].to_numpy(dtype=float), values)

    def save_ensemble(self, stats: EnsembleStats, path: PathLike) -> Path:
        data: Dict[str, np.ndarray] = {'t': stats.times}
        arrays = {stat: stats.statistic(stat) for stat in STATISTICS}
        for column, name in enumerate(COMPARTMENTS):
            for stat in STATISTICS:
                data[f"{name}_{stat}"] = arrays[stat][:, column]
        data['total_naive_mean'] = arrays['mean'][:, 0] + arrays['mean'][:, 1]
        return self._write_frame(pd.DataFrame(data, columns=ensemble_columns()), path)

    def save_comparison(self, report: ComparisonReport, path: PathLike) -> Path:
        path = Path(path)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            with open(path, 'w', encoding='utf-8', newline='\n') as handle:
                json.dump(report.to_dict(), handle, indent=2)
                handle.write('\n')
        except OSError as e:
            logger.error(f"Error writing {path}: {str(e)}")
            raise ExportError(path, e)
        logger.info(f"Wrote comparison report to {path}")
        return path

    def save_summary(self, rows: Sequence[Mapping[str, Any]], path: PathLike) -> Path:
        return self._write_frame(pd.DataFrame(list(rows)), path)

    def save_memory_estimate(self, estimate: MemoryEstimate, path: PathLike) -> Path:
        return self._write_frame(pd.DataFrame(estimate.to_columns()), path)

    def load_table(self, path: PathLike) -> List[Dict[str, Any]]:
        return self._read_frame(path).to_dict(orient='records')
