def number(v):
    if isinstance(v, bool):
        return 'yes' if v else 'no'
    if isinstance(v, float):
        return '%.17g' % v
    return '' if v is None else str(v)


def table(writer, headers, rows):
    """An rST simple table. Cells are formatted with `number`."""
    rows = [[number(c) for c in row] for row in rows]
    widths = [
        max([len(h)] + [len(row[i]) for row in rows])
        for i, h in enumerate(headers)
    ]
    rule = '  '.join('=' * w for w in widths)

    def line(cells):
        writer('  '.join(c.ljust(w) for c, w in zip(cells, widths)).rstrip())
        writer('\n')

    writer(rule)
    writer('\n')
    line(headers)
    writer(rule)
    writer('\n')
    for row in rows:
        line(row)
    writer(rule)
    writer('\n')


def section(writer, title, section_char):
    writer(title)
    writer('\n')
    writer(section_char * len(title))
    writer('\n')
    writer('\n')


from . import checks
from . import report
