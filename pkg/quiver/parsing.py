"""
Quiver files.

Text format (UTF-8)::

    # comment
    vertices 3
    arrow 1 3
    arrow 2 3

JSON alternative: ``{"vertices": 3, "arrows": [[1, 3], [2, 3]]}``.
"""
import json
from pathlib import Path

from django.core.exceptions import ValidationError

from .models import Quiver


def _parse_error(line_no, message):
    return ValidationError(
        "Line %(line)s: %(message)s", code='parse', params={'line': line_no, 'message': message})


def _is_number(word):
    return word.isascii() and word.isdecimal()


def _is_int(value):
    return isinstance(value, int) and not isinstance(value, bool)


def _parse_json(text):
    try:
        data = json.loads(text)
        n = data['vertices']
        arrows = data.get('arrows', [])
    except (ValueError, KeyError, TypeError) as exc:
        raise _parse_error(1, f"invalid JSON quiver ({exc})") from exc
    if not _is_int(n) or n < 0:
        raise _parse_error(1, "'vertices' must be a non-negative integer")
    pairs = []
    for k, arrow in enumerate(arrows, start=1):
        if (not isinstance(arrow, (list, tuple)) or len(arrow) != 2
                or not all(_is_int(v) for v in arrow)):
            raise _parse_error(1, f"arrow #{k} must be a pair of integers")
        pairs.append((k, arrow[0], arrow[1]))
    return n, pairs


def _parse_text(text):
    n = None
    pairs = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        words = line.split()
        if words[0] == 'vertices':
            if n is not None:
                raise _parse_error(line_no, "repeated 'vertices' line")
            if len(words) != 2 or not _is_number(words[1]):
                raise _parse_error(line_no, "expected 'vertices <n>'")
            n = int(words[1])
        elif words[0] == 'arrow':
            if n is None:
                raise _parse_error(line_no, "'arrow' before 'vertices'")
            if len(words) != 3 or not (_is_number(words[1]) and _is_number(words[2])):
                raise _parse_error(line_no, "expected 'arrow <s> <t>'")
            pairs.append((line_no, int(words[1]), int(words[2])))
        else:
            raise _parse_error(line_no, f"unknown keyword '{words[0]}'")
    if n is None:
        raise _parse_error(1, "missing 'vertices' line")
    return n, pairs


def parse_quiver(text):
    stripped = text.lstrip()
    n, pairs = _parse_json(text) if stripped.startswith('{') else _parse_text(text)
    for line_no, s, t in pairs:
        if not (1 <= s <= n and 1 <= t <= n):
            raise _parse_error(line_no, f"arrow {s} {t} outside vertices 1..{n}")
        if s == t:
            raise ValidationError(
                "Line %(line)s: loop at vertex %(vertex)s is not allowed", code='loop',
                params={'line': line_no, 'vertex': s})
    return Quiver.from_arrows(n, [(s, t) for _, s, t in pairs])


def load_quiver(path):
    try:
        text = Path(path).read_text(encoding='utf-8')
    except OSError as exc:
        raise ValidationError(
            "Cannot read quiver file %(path)s: %(reason)s", code='parse',
            params={'path': path, 'reason': exc.strerror}) from exc
    except UnicodeDecodeError as exc:
        raise ValidationError(
            "Quiver file %(path)s is not valid UTF-8 (byte %(position)s)", code='parse',
            params={'path': path, 'position': exc.start}) from exc
    return parse_quiver(text)


def quiver_to_json(q):
    return {
        'vertices': list(q.labels),
        'arrows': [[q.labels[s], q.labels[t]] for s, t in q.arrows],
    }
