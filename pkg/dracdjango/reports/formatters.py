# -*- coding: utf-8 -*-
"""Rendering of command results as text tables, CSV or JSON.

Results are lists of rows, each row a dict keyed by column name. Output is
a pure function of the rows so equal results give byte identical files.
"""
import math
from fractions import Fraction

from rest_framework.renderers import JSONRenderer
from rest_framework_csv.renderers import CSVRenderer

TEXT = 'text'
CSV = 'csv'
JSON = 'json'
FORMATS = (TEXT, CSV, JSON)

FLOAT_DIGITS = 12


def format_value(value):
    if isinstance(value, bool):
        return 'yes' if value else 'no'
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        return '{:.{}g}'.format(value, FLOAT_DIGITS)
    if value is None:
        return ''
    return str(value)


def _json_value(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        # Strict JSON has no infinities.
        return round(value, FLOAT_DIGITS) if math.isfinite(value) else str(value)
    if isinstance(value, dict):
        return {k: _json_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_value(v) for v in value]
    return value


def render_text(rows, columns, title=None):
    cells = [[format_value(row.get(c)) for c in columns] for row in rows]
    widths = [max([len(c)] + [len(r[i]) for r in cells]) for i, c in enumerate(columns)]
    lines = []
    if title:
        lines.append(title)
    lines.append('  '.join(c.ljust(w) for c, w in zip(columns, widths)).rstrip())
    lines.append('  '.join('-' * w for w in widths))
    for row in cells:
        lines.append('  '.join(v.ljust(w) for v, w in zip(row, widths)).rstrip())
    return '\n'.join(lines) + '\n'


def _text(content):
    return content.decode('utf-8') if isinstance(content, bytes) else content


class ReportCSVRenderer(CSVRenderer):
    writer_opts = {'lineterminator': '\n'}


def render_csv(rows, columns):
    cells = [{c: format_value(row.get(c)) for c in columns} for row in rows]
    return _text(ReportCSVRenderer().render(cells, renderer_context={'header': list(columns)}))


def render_json(data):
    return _text(JSONRenderer().render(_json_value(data), renderer_context={'indent': 2})) + '\n'


def render(rows, columns, fmt=TEXT, title=None):
    if fmt == CSV:
        return render_csv(rows, columns)
    if fmt == JSON:
        return render_json([{c: row.get(c) for c in columns} for row in rows])
    return render_text(rows, columns, title)


def render_document(document, fmt=TEXT):
    """Render a single record, e.g. a task or a strategy."""
    if fmt == JSON:
        return render_json(document)
    rows = [{'field': key, 'value': value} for key, value in document.items()]
    if fmt == CSV:
        return render_csv(rows, ('field', 'value'))
    return ''.join('{}: {}\n'.format(row['field'], format_value(row['value'])) for row in rows)
