"""Graphviz DOT emission."""


def gvquote(s):
    return '"{}"'.format(str(s).replace('"', r'\"'))


def dot_lines(q, name=None):
    """Yield the lines of a DOT digraph for q: vertices in label order, arrows in input order."""
    yield "digraph {}{{\n".format(gvquote(name) + ' ' if name else '')
    for label in q.labels:
        yield "  {};\n".format(gvquote(label))
    for s, t in q.arrows:
        yield "  {} -> {};\n".format(gvquote(q.labels[s]), gvquote(q.labels[t]))
    yield "}\n"


def to_dot(q, name=None):
    return ''.join(dot_lines(q, name))
