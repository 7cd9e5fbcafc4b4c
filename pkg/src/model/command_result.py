from typing import List


class CommandResult:
    def __init__(self, command: str, result_path: str, artifacts: List[str], passed: bool, summary: dict) -> None:
        self._command = command
        self._result_path = result_path
        self._artifacts = artifacts
        self._passed = passed
        self._summary = summary

    def get_command(self) -> str:
        return self._command

    def get_result_path(self) -> str:
        return self._result_path

    def get_artifacts(self) -> List[str]:
        return self._artifacts

    def is_passed(self) -> bool:
        return self._passed

    def get_summary(self) -> dict:
        return self._summary
