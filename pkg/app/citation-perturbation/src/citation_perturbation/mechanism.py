import structlog

from citation_perturbation.models import DiffReport, Mechanism, MechanismReport, ScaleChange

log = structlog.get_logger()


def classify_mechanism(report: DiffReport) -> MechanismReport:
    """
    Names why the P100 scale moved.

    An appeared count filled a gap of the scale. A vanished count whose papers all moved onto
    counts that were already ranked merged into them and left a gap behind; otherwise the
    count was emptied. More unique counts compress the spacing 100/i_max, fewer dilate it.
    """
    ranked_before = {citations for citations, shift in report.count_shifts.items() if shift.p100_before is not None}
    tags = dict.fromkeys(report.counts_appeared, Mechanism.GAP_FILLED)
    for citations in report.counts_vanished:
        destinations = {shift.citations_after for shift in report.per_paper.values() if shift.citations_before == citations}
        tags[citations] = Mechanism.GAP_CREATED if destinations <= ranked_before else Mechanism.EMPTIED

    if report.i_max_after > report.i_max_before:
        scale_change = ScaleChange.COMPRESSION
    elif report.i_max_after < report.i_max_before:
        scale_change = ScaleChange.DILATION
    else:
        scale_change = ScaleChange.UNCHANGED

    mechanism = MechanismReport(tags=dict(sorted(tags.items())), scale_change=scale_change, i_max_before=report.i_max_before, i_max_after=report.i_max_after)
    log.debug("mechanism classified", scale_change=str(scale_change), tags=len(tags))
    return mechanism
