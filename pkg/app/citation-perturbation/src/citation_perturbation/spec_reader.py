import re
from pathlib import Path

import structlog
from citation_core.dataset_reader import decode_text

from citation_perturbation.core import SpecFormatError
from citation_perturbation.models import CountSelector, IdSelector, PerturbationDelta, PerturbationSpec

log = structlog.get_logger()

# "<selector> <signed integer>", selector "id:<paper id>" or "at:<count>#<ordinal>"
_DELTA_LINE = re.compile(r"^(?P<selector>\S+)\s+(?P<delta>[+-]?\d+)$", re.ASCII)
_COUNT_SELECTOR = re.compile(r"^at:(?P<citations>\d+)(?:#(?P<ordinal>\d+))?$", re.ASCII)


def _parse_selector(text: str, line_number: int) -> IdSelector | CountSelector:
    if text.startswith("id:"):
        if len(text) == 3:
            raise SpecFormatError("empty paper id in selector 'id:'", line_number)
        return IdSelector(paper_id=text[3:])
    match = _COUNT_SELECTOR.match(text)
    if match is None:
        raise SpecFormatError(f"selector must be 'id:<paper id>' or 'at:<count>#<ordinal>', got '{text}'", line_number)
    ordinal = int(match["ordinal"] or 1)
    if ordinal < 1:
        raise SpecFormatError(f"ordinals start at 1, got '{text}'", line_number)
    return CountSelector(citations=int(match["citations"]), ordinal=ordinal)


def parse_perturbation_spec(content: str) -> PerturbationSpec:
    deltas = []
    for line_number, line in enumerate(content.splitlines(), start=1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        match = _DELTA_LINE.match(text)
        if match is None:
            raise SpecFormatError(f"expected '<selector> <signed integer>', got '{text}'", line_number)
        selector = _parse_selector(match["selector"], line_number)
        deltas.append(PerturbationDelta(selector=selector, delta=int(match["delta"]), line_number=line_number))
    return PerturbationSpec(deltas=tuple(deltas))


def read_perturbation_spec(file_path: str | Path) -> PerturbationSpec:
    path = Path(file_path)
    spec = parse_perturbation_spec(decode_text(path.read_bytes(), f"perturbation spec '{path.name}'", SpecFormatError))
    log.info("perturbation spec read", path=str(path), deltas=len(spec.deltas), net_delta=spec.net_delta())
    return spec


def format_perturbation_spec(spec: PerturbationSpec) -> str:
    return "".join(f"{delta}\n" for delta in spec.deltas)
