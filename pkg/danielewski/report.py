# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License


class CheckResult:
    def __init__(self, name, passed, detail=""):
        self.name = name
        self.passed = bool(passed)
        self.detail = detail

    def to_dict(self):
        return {"name": self.name, "passed": self.passed, "detail": self.detail}

    @classmethod
    def from_dict(cls, data):
        return cls(data["name"], data["passed"], data.get("detail", ""))

    def __repr__(self):
        return "CheckResult({!r}, {})".format(self.name, self.passed)


class Report:
    """Named pass/fail checks; always listed sorted by check name."""

    def __init__(self, title, checks=None, data=None):
        self.title = title
        self._checks = {}
        self.data = dict(data or {})
        for check in checks or []:
            self._checks[check.name] = check

    def add(self, name, passed, detail=""):
        self._checks[name] = CheckResult(name, passed, detail)
        return self._checks[name]

    def extend(self, other, prefix=""):
        for check in other.checks:
            self.add(prefix + check.name, check.passed, check.detail)

    @property
    def checks(self):
        return [self._checks[name] for name in sorted(self._checks)]

    def __getitem__(self, name):
        return self._checks[name]

    def __contains__(self, name):
        return name in self._checks

    @property
    def passed(self):
        return all(check.passed for check in self._checks.values())

    def failed(self):
        return [check.name for check in self.checks if not check.passed]

    def to_dict(self):
        return {
            "title": self.title,
            "passed": self.passed,
            "data": self.data,
            "checks": [check.to_dict() for check in self.checks],
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            data["title"],
            [CheckResult.from_dict(check) for check in data.get("checks", [])],
            data.get("data"),
        )

    def render(self):
        n_pass = sum(check.passed for check in self._checks.values())
        lines = ["{}: {}/{} PASS".format(self.title, n_pass, len(self._checks))]
        for key, value in sorted(self.data.items()):
            lines.append("  {} = {}".format(key, value))
        for check in self.checks:
            status = "PASS" if check.passed else "FAIL"
            line = "  {} {}".format(status, check.name)
            if check.detail:
                line += ": " + check.detail
            lines.append(line)
        return "\n".join(lines)

    def __repr__(self):
        return "Report({!r}, passed={})".format(self.title, self.passed)
