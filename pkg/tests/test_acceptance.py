"""All nine acceptance criteria over the acceptance cases, one PASS/FAIL line per criterion."""

from bkcohom import verify


def test_acceptance(capsys):
    by_criterion = {}
    for type_, I in verify.ACCEPTANCE_CASES:
        for r in verify.run_case(type_, I):
            by_criterion.setdefault((r.number, r.name), []).append((f"{type_}/{set(I) or '{}'}", r))
    lines, failed = [], []
    for (num, name), rows in sorted(by_criterion.items()):
        ok = all(r.ok for _, r in rows)
        lines.append(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {name}")
        for case, r in rows:
            if not r.ok:
                failed.append(f"criterion {num} on {case}: {r.details[:3]}")
    with capsys.disabled():
        print()
        print("\n".join(lines))
    assert len(lines) == 9
    assert not failed, "\n".join(failed)
