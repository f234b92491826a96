import json
from pathlib import Path
from typing import Iterable, List, Optional, TextIO

from pydantic import ValidationError

from ..core.exceptions import PatternFormatError, RuleFormatError
from ..core.logger import logger
from ..models.graph import PropertyGraph
from ..models.pattern import format_pattern, parse_pattern
from ..schemas.rule import RuleRecord
from ..services.miner_service import Rule


class CRUDRuleFiles:
    """JSON-lines rule files: one RuleRecord object per line."""

    def record_from_rule(self, rule: Rule, graph: PropertyGraph) -> RuleRecord:
        return RuleRecord(
            antecedent_text=format_pattern(rule.antecedent, graph.label_dict, graph.attribute_dict),
            consequent_text=format_pattern(rule.consequent, graph.label_dict, graph.attribute_dict),
            asupp=rule.asupp,
            rsupp=rule.rsupp,
            conf=rule.conf,
            lift=rule.lift,
            estimated=rule.estimated,
            ci=rule.ci,
        )

    def serialize_rule(self, rule: Rule, graph: PropertyGraph) -> str:
        return self.record_from_rule(rule, graph).model_dump_json()

    def parse_record(self, text: str, line_number: Optional[int] = None) -> RuleRecord:
        """Parse one line into a RuleRecord, naming the offending field on failure."""
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as e:
            raise RuleFormatError(f"invalid JSON: {e.msg}", line_number)
        if not isinstance(payload, dict):
            raise RuleFormatError("expected a JSON object", line_number)
        try:
            return RuleRecord.model_validate(payload)
        except ValidationError as e:
            first = e.errors()[0]
            field = ".".join(str(p) for p in first["loc"]) or None
            raise RuleFormatError(first["msg"], line_number, field)

    def parse_rule(self, text: str, graph: PropertyGraph, line_number: Optional[int] = None) -> Rule:
        """Inverse of serialize_rule; pattern names must exist in the graph's dictionaries."""
        record = self.parse_record(text, line_number)
        patterns = []
        for field in ("antecedent_text", "consequent_text"):
            try:
                patterns.append(parse_pattern(getattr(record, field), graph.label_dict, graph.attribute_dict))
            except PatternFormatError as e:
                raise RuleFormatError(str(e), line_number, field)
        return Rule(
            antecedent=patterns[0],
            consequent=patterns[1],
            asupp=record.asupp,
            rsupp=record.rsupp,
            conf=record.conf,
            lift=record.lift,
            estimated=record.estimated,
            ci=record.ci,
        )

    def write_rules(self, rules: Iterable[Rule], graph: PropertyGraph, sink: TextIO) -> int:
        count = 0
        for rule in rules:
            sink.write(self.serialize_rule(rule, graph))
            sink.write("\n")
            count += 1
        return count

    def write_rule_file(self, rules: Iterable[Rule], graph: PropertyGraph, path: str | Path) -> int:
        with open(path, "w", encoding="utf-8", newline="\n") as sink:
            count = self.write_rules(rules, graph, sink)
        logger.info(f"Wrote {count} rules to {path}")
        return count

    def read_records(self, source: TextIO) -> List[RuleRecord]:
        return [
            self.parse_record(line, number)
            for number, line in enumerate(source, start=1)
            if line.strip()
        ]

    def read_rule_file(self, path: str | Path) -> List[RuleRecord]:
        try:
            with open(path, encoding="utf-8") as source:
                return self.read_records(source)
        except OSError as e:
            raise RuleFormatError(f"cannot read {path}: {e.strerror}")


# Instance of the class to be imported by the CLI
crud_rule_files = CRUDRuleFiles()
