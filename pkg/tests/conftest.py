import pytest

# criterion number -> list of (part, passed, detail), filled by test_acceptance
ACCEPTANCE: dict[int, list[tuple[str, bool, str]]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        parts = ACCEPTANCE[num]
        ok = all(p for _, p, _ in parts)
        failed = "; ".join(f"{name}: {detail}" for name, p, detail in parts if not p)
        line = f"criterion {num}: {'PASS' if ok else 'FAIL'} ({len(parts)} checks)"
        terminalreporter.write_line(line + (f" -- {failed}" if failed else ""))
