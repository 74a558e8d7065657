"""
Report View
Console lines and tables for command results
"""

import click
from tabulate import tabulate


def success(message):
    click.echo(f"✓ {message}")


def failure(message):
    click.echo(f"✗ {message}")


def error(message):
    click.echo(f"✗ Error: {message}", err=True)


def banner(title):
    click.echo("\n" + "=" * 60)
    click.echo(title)
    click.echo("=" * 60 + "\n")


def word_text(word):
    """Display a reduced word as s1s2, the identity as e"""
    if not word:
        return "e"
    return "s" + "s".join(str(i) for i in word)


def classification_table(report):
    """
    Render a classification report

    Args:
        report (dict): output of classify_subset

    Returns:
        str: two-column table
    """
    rows = [
        ["size", report["size"]],
        ["extremal (E)", _mark(report["extremal"])],
        ["ideal (I)", _mark(report["ideal"])],
        ["principal (P)", _mark(report["principal"])],
        ["Demazure", _mark(report["demazure"])],
    ]
    if "w" in report:
        rows.append(["w", word_text(report["w"])])
    if "ideal_generators" in report:
        rows.append(
            ["ideal generators", ", ".join(word_text(g) for g in report["ideal_generators"])]
        )
    if "witness" in report:
        rows.append(["witness", report["witness"]])
    return tabulate(rows, tablefmt="simple")


def _mark(flag):
    return "✓" if flag else "✗"


def atom_table(atoms, monomials=None):
    """
    Atoms of a decomposition, one row each

    Args:
        atoms (list): AtomSubset objects
        monomials (dict, optional): WeylElement -> polynomial text
    """
    headers = ["w", "size", "members"]
    if monomials is not None:
        headers.append("character")
    rows = []
    for atom in atoms:
        row = [word_text(atom.w.word), len(atom), " ".join(atom.find_all())]
        if monomials is not None:
            row.append(monomials.get(atom.w, ""))
        rows.append(row)
    return tabulate(rows, headers=headers, tablefmt="simple")


def character_table(char):
    """Weight and multiplicity columns, lexicographic order"""
    rows = [[tuple(wt), mult] for wt, mult in char.sorted_terms()]
    return tabulate(rows, headers=["weight", "mult"], tablefmt="simple")


def suite_table(results):
    """
    Verification summary

    Args:
        results (list): SuiteResult objects
    """
    rows = [
        [r.name, _mark(r.passed), r.checked, r.summary]
        for r in results
    ]
    return tabulate(rows, headers=["suite", "ok", "checked", "summary"], tablefmt="simple")
