from . import section, table


def generate(writer, checks, section_char='~'):
    """One table per check source, in the order the sources first appear."""
    sources = []
    for c in checks:
        if c.source not in sources:
            sources.append(c.source)
    for source in sources:
        section(writer, source.capitalize(), section_char)
        table(
            writer,
            ['check', 'expected', 'computed', 'tolerance', 'pass'],
            [
                [c.name, c.expected, c.computed, c.tolerance, c.passed]
                for c in checks if c.source == source
            ],
        )
        writer('\n')
    failed = sum(not c.passed for c in checks)
    writer('{0} checks, {1} failed\n'.format(len(checks), failed))
