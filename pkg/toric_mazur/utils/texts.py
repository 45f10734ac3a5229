from __future__ import annotations

from abc import ABCMeta, abstractmethod
from typing import TYPE_CHECKING, Dict, List, Sequence

if TYPE_CHECKING:
    from ..divisor import OrthogonalSet
    from ..fan import Fan
    from ..lattice.models import CohomologyReport, LatticePointSet, ProjectionReport, SweepReport


class ReportTextBase(metaclass=ABCMeta):
    """
    Abstract base class for rendering reports in different text styles.

    :param style: The text style, "plain" or "markdown".
    """

    @property
    @abstractmethod
    def templates(self) -> Dict[str, Dict[str, str]]:
        """
        Property to retrieve a dictionary of templates for each style.

        :return: Dictionary containing templates for each style.
        """
        raise NotImplementedError

    def __init__(self, style: str = "plain") -> None:
        """
        If the provided style is not supported, the "plain" style is used.

        :param style: The text style.
        """
        if style not in self.templates.keys():
            style = "plain"
        self.style = style

    def get(self, code: str) -> str:
        """
        Get a template of the current style.

        :param code: Code identifying the template.
        :return: The template.
        """
        return self.templates[self.style][code]

    def table(self, header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
        """
        Render rows as an aligned plain table or a markdown pipe table.
        """
        if self.style == "markdown":
            lines = ["| " + " | ".join(header) + " |", "|" + "|".join("---" for _ in header) + "|"]
            lines.extend("| " + " | ".join(row) + " |" for row in rows)
            return "\n".join(lines)

        widths = [max(len(str(cell)) for cell in column) for column in zip(header, *rows)]
        lines = ["  ".join(cell.ljust(width) for cell, width in zip(header, widths)).rstrip()]
        lines.append("  ".join("-" * width for width in widths))
        lines.extend("  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() for row in rows)
        return "\n".join(lines)


class ReportText(ReportTextBase):
    """
    Concrete implementation of ReportTextBase for fans, point sets and reports.
    """

    @property
    def templates(self) -> Dict[str, Dict[str, str]]:
        return {
            "plain": {
                "fan_title": "Fan {name}: {rays} rays, {cones} maximal cones",
                "points_title": "{size} points ({lattice} lattice)",
                "cohomology_title": "Restriction along {alpha}",
                "cohomology_body": (
                    "h0 = {h0}\n"
                    "h0 on D_alpha = {h0_div}\n"
                    "coker = {coker}"
                ),
                "missing": "Missing: {points}",
                "oracle": "Topological H1 total: {total} ({verdict})",
                "projection_title": "Projection equality for {levi}: {verdict}",
                "projection_body": "lhs: {lhs} points, rhs: {rhs} points",
                "witnesses": "Witnesses: {points}",
                "step": "  step {batches}: {verdict}",
                "sweep": "Theorem {theorem}: {instances} instances, {failures} failures, {elapsed} ms ({verdict})",
                "divisor_title": "Divisor on {name}",
                "pass": "ok",
                "fail": "FAILED",
            },
            "markdown": {
                "fan_title": "### Fan `{name}`: {rays} rays, {cones} maximal cones",
                "points_title": "**{size} points** ({lattice} lattice)",
                "cohomology_title": "### Restriction along `{alpha}`",
                "cohomology_body": (
                    "- h0 = **{h0}**\n"
                    "- h0 on D_alpha = **{h0_div}**\n"
                    "- coker = **{coker}**"
                ),
                "missing": "- missing: {points}",
                "oracle": "- topological H1 total: **{total}** ({verdict})",
                "projection_title": "### Projection equality for {levi}: **{verdict}**",
                "projection_body": "- lhs: {lhs} points, rhs: {rhs} points",
                "witnesses": "- witnesses: {points}",
                "step": "  - step {batches}: {verdict}",
                "sweep": "- **{theorem}**: {instances} instances, {failures} failures, {elapsed} ms ({verdict})",
                "divisor_title": "### Divisor on `{name}`",
                "pass": "ok",
                "fail": "FAILED",
            },
        }

    def verdict(self, passed: bool) -> str:
        return self.get("pass" if passed else "fail")

    @staticmethod
    def points(points: Sequence) -> str:
        return ", ".join(str(p) for p in points) or "-"

    def fan(self, fan: Fan) -> str:
        lines: List[str] = [self.get("fan_title").format(name=fan.name, rays=len(fan.rays), cones=len(fan.cones))]
        rows = []
        for cone_id, cone in fan.cones.items():
            neighbors = ", ".join(f"{a.neighbor} [{a.root}]" for a in fan.adjacency[cone_id])
            rows.append([cone_id, " ".join(str(r) for r in cone.rays), neighbors])
        lines.append(self.table(["cone", "rays", "neighbors [wall root]"], rows))
        return "\n".join(lines)

    def point_set(self, points: LatticePointSet) -> str:
        lines = [self.get("points_title").format(size=len(points), lattice=points.tag.value)]
        lines.extend(str(p) for p in points)
        return "\n".join(lines)

    def divisor(self, os: OrthogonalSet) -> str:
        lines = [self.get("divisor_title").format(name=os.fan.name)]
        lines.append(self.table(["cone", "character"], [[k, str(u)] for k, u in os.chars.items()]))
        return "\n".join(lines)

    def cohomology(self, report: CohomologyReport) -> str:
        lines = [
            self.get("cohomology_title").format(alpha=report.alpha),
            self.get("cohomology_body").format(
                h0=report.h0_dim, h0_div=report.h0_divisor_dim, coker=report.coker_dim
            ),
        ]
        if report.missing:
            lines.append(self.get("missing").format(points=self.points(report.missing)))
        if report.per_eigenweight is not None:
            lines.append(self.get("oracle").format(
                total=report.oracle_total, verdict=self.verdict(bool(report.oracle_agrees))
            ))
        return "\n".join(lines)

    def projection(self, report: ProjectionReport) -> str:
        lines = [
            self.get("projection_title").format(levi=report.label, verdict=self.verdict(report.equal)),
            self.get("projection_body").format(lhs=len(report.lhs), rhs=len(report.rhs)),
        ]
        if report.witnesses:
            lines.append(self.get("witnesses").format(points=self.points(report.witnesses)))
        for step in report.steps:
            lines.append(self.get("step").format(
                batches=",".join(map(str, step.batches)), verdict=self.verdict(step.equal)
            ))
        return "\n".join(lines)

    def sweep(self, report: SweepReport) -> str:
        return self.get("sweep").format(
            theorem=report.theorem,
            instances=report.instances,
            failures=len(report.failures),
            elapsed=int(round(report.elapsed * 1000)),
            verdict=self.verdict(report.passed),
        )
