from . import number, section, table


def generate(writer, params, report, section_char='~', parts=None):
    section(writer, 'Worst case', section_char)
    writer(':certified_max: ')
    writer(number(report.certified_max))
    writer('\n')
    writer(':argmax: ')
    writer(report.argmax.label or number(report.argmax.x))
    writer('\n')
    if report.scan_max:
        writer(':scan_max: ')
        writer(number(report.scan_max[1]))
        writer('\n')
    if report.disagreement:
        writer('\n')
        writer('.. warning::\n')
        writer('\n')
        with writer:
            writer('The dense scan exceeds the certified maximum.')
        writer('\n')
    writer('\n')

    section(writer, 'Parameters', section_char)
    table(
        writer,
        ['cut', 'p', 'alpha', 'd'],
        [[i, c.p, c.alpha, c.d] for i, c in enumerate(params.cuts, 1)],
    )
    writer('\n')

    section(writer, 'Candidates', section_char)
    table(
        writer,
        ['label', 'x', 'variant', 'reason', 'evac', 'beta', 'gamma', 'movement'],
        [
            [
                c.label, c.x, c.variant.value, c.reason.value, c.evac,
                c.angles.beta if c.angles else None,
                c.angles.gamma if c.angles else None,
                c.angles.movement.value if c.angles else None,
            ]
            for c in report.candidates
        ],
    )

    if parts:
        writer('\n')
        section(writer, 'Partition', section_char)
        table(
            writer,
            ['arc', 'from', 'to', 'pickup', 'cut'],
            [
                [p.start_label + p.end_label, p.start, p.end, p.phase, None if p.cut is None else p.cut + 1]
                for p in parts
            ],
        )
