"""Full cross product of families, algorithms and p, laid out as one grid."""

from __future__ import annotations

from collections.abc import Mapping, Sequence

from pydantic import BaseModel, ConfigDict, Field

from ..distributions import FamilyTag, InstanceFamily
from ..output import OutputRow, rows_from_report
from ..regret import Estimator
from ..utils.logging_config import get_logger
from .config import (
    DEFAULT_P_GRID,
    DEFAULT_REPLICATIONS,
    Algorithm,
    ExperimentConfig,
    default_horizon,
)
from .execution import run_experiment

logger = get_logger(__name__)

TABLE_FAMILIES = (
    FamilyTag.BERNOULLI,
    FamilyTag.TRIANGULAR,
    FamilyTag.BETA,
    FamilyTag.UNIFORM,
)
TABLE_ALGORITHMS = (Algorithm.UCB1, Algorithm.NCB, Algorithm.EUCB)


class TableSeeds(BaseModel):
    model_config = ConfigDict(frozen=True)

    instance_seed: int = Field(default=0, ge=0)
    base_seed: int = Field(default=0, ge=0)


class TableResult(BaseModel):
    """Rows ordered by p block, then algorithm row, then family column."""

    rows: list[OutputRow]

    def grid(self) -> dict[float, dict[str, dict[str, float]]]:
        """p -> algorithm -> family -> mean regret."""
        out: dict[float, dict[str, dict[str, float]]] = {}
        for row in self.rows:
            out.setdefault(row.p, {}).setdefault(row.algorithm, {})[
                row.instance_family
            ] = row.regret_mean
        return out


def reproduce_table(
    families: Sequence[FamilyTag] = TABLE_FAMILIES,
    algorithms: Sequence[Algorithm] = TABLE_ALGORITHMS,
    p_grid: Sequence[float] = DEFAULT_P_GRID,
    seeds: TableSeeds = TableSeeds(),
    R: int = DEFAULT_REPLICATIONS,
    estimator: Estimator = Estimator.PER_RUN_REALIZED_REWARD,
    k: int = 50,
    horizons: Mapping[FamilyTag, int] | None = None,
    workers: int | None = None,
) -> TableResult:
    """Run every (family, algorithm) experiment and lay the cells out."""
    cells: list[OutputRow] = []
    for tag in families:
        T = (horizons or {}).get(tag, default_horizon(tag))
        for algorithm in algorithms:
            config = ExperimentConfig.create(
                family=InstanceFamily(tag=tag, k=k),
                algorithm=algorithm,
                T=T,
                R=R,
                p_grid=tuple(p_grid),
                base_seed=seeds.base_seed,
                instance_seed=seeds.instance_seed,
                estimator=estimator,
            )
            cells.extend(rows_from_report(run_experiment(config, workers)))

    p_order = {p + 0.0: i for i, p in enumerate(p_grid)}
    alg_order = {a.value: i for i, a in enumerate(algorithms)}
    fam_order = {f.value: i for i, f in enumerate(families)}
    cells.sort(
        key=lambda row: (
            p_order.get(row.p, len(p_order)),
            alg_order[row.algorithm],
            fam_order[row.instance_family],
        )
    )
    logger.info(f"Table complete: {len(cells)} cells")
    return TableResult(rows=cells)
