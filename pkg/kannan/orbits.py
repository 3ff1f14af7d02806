"""
Orbits O_x(T) = {x, Tx, T^2x, ...} with exact fixed-point and cycle detection.
"""
import logging
from dataclasses import dataclass
from itertools import combinations
from math import ceil
from typing import Dict, List, Optional

from kannan.models.maps import SelfMap
from kannan.models.reports import ClusterProbeReport, OrbitReport, OrbitStatus
from kannan.models.scalar import ZERO, Scalar
from kannan.models.spaces import Point, PointValue, Space

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Orbit:
    space: Space
    start: Point
    points: List[Point]
    gaps: List[Scalar]
    status: OrbitStatus

    @property
    def fixed_point(self) -> Optional[Point]:
        if self.status.kind == "fixed_point_reached":
            return self.points[self.status.index]
        return None

    def to_report(self) -> OrbitReport:
        return OrbitReport(
            start=str(self.start),
            points=[str(p) for p in self.points],
            gaps=list(self.gaps),
            status=self.status,
        )


def orbit(m: SelfMap, x0: Point, horizon: int) -> Orbit:
    """
    Строит до horizon+1 точек орбиты. Остановка: точная неподвижная точка (s_n = 0),
    точный повтор ранее встреченной точки или горизонт.
    """
    if horizon < 1:
        raise ValueError("horizon must be a positive integer")
    space = m.space
    space.require(x0)

    points = [x0]
    gaps: List[Scalar] = []
    seen: Dict[PointValue, int] = {x0.value: 0}
    status = OrbitStatus(kind="truncated", horizon=horizon)

    for step in range(horizon):
        current = points[-1]
        image = m.apply(current)
        gap = space.dist(current, image)
        points.append(image)
        gaps.append(gap)
        if gap == 0:
            status = OrbitStatus(kind="fixed_point_reached", index=step)
            break
        if image.value in seen:
            entry = seen[image.value]
            status = OrbitStatus(kind="cycle_detected", index=entry, period=step + 1 - entry)
            break
        seen[image.value] = step + 1

    logger.debug("orbit of %s from %s: %s after %d step(s)", m.name, x0, status.kind, len(gaps))
    return Orbit(space=space, start=x0, points=points, gaps=gaps, status=status)


def iterates(m: SelfMap, x0: Point, count: int) -> List[Point]:
    """x0, Tx0, ..., T^count x0 без ранней остановки"""
    points = [m.space.require(x0)]
    for _ in range(count):
        points.append(m.apply(points[-1]))
    return points


def orbit_cluster_probe(o: Orbit, radius: Scalar) -> ClusterProbeReport:
    if len(o.points) < 2:
        raise ValueError("cluster probe needs at least two orbit points")
    space = o.space
    n = len(o.points)
    required = ceil(n / 2)

    diameter = ZERO
    neighbours = [0] * n
    for i, j in combinations(range(n), 2):
        d = space.dist(o.points[i], o.points[j])
        diameter = max(diameter, d)
        if d <= radius:
            neighbours[i] += 1
            neighbours[j] += 1

    # eventually periodic orbits repeat a point infinitely often
    if o.status.kind != "truncated":
        center_index = o.status.index
        return ClusterProbeReport(
            radius=radius, cluster_evidence=True, center=str(o.points[center_index]),
            neighbours=neighbours[center_index], required=required, diameter=diameter,
        )

    best = max(range(n), key=lambda i: (neighbours[i], -i))
    return ClusterProbeReport(
        radius=radius,
        cluster_evidence=neighbours[best] >= required,
        center=str(o.points[best]),
        neighbours=neighbours[best],
        required=required,
        diameter=diameter,
    )
