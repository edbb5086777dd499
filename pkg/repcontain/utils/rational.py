from fractions import Fraction
from typing import Any, List

from pydantic import GetJsonSchemaHandler
from pydantic_core import CoreSchema, core_schema


def parse_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError("Booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"Invalid rational {value!r}, expected 'p/q'")
    raise ValueError(f"Invalid rational {value!r}")


def parse_rational_list(text: str) -> List[Fraction]:
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise ValueError("Empty coordinate list")
    return [parse_rational(p) for p in parts]


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


class PyRational:
    """Exact rational field type: Fraction in Python, "p/q" string in JSON."""

    @classmethod
    def __get_pydantic_core_schema__(
        cls,
        _source_type: Any,
        _handler: GetJsonSchemaHandler,
    ) -> CoreSchema:
        from_text = core_schema.chain_schema([
            core_schema.union_schema([core_schema.str_schema(), core_schema.int_schema(strict=True)]),
            core_schema.no_info_plain_validator_function(cls.validate),
        ])
        return core_schema.json_or_python_schema(
            json_schema=from_text,
            python_schema=core_schema.union_schema([
                core_schema.is_instance_schema(Fraction),
                from_text,
            ]),
            serialization=core_schema.plain_serializer_function_ser_schema(
                format_rational, when_used="json"
            ),
        )

    @classmethod
    def __get_pydantic_json_schema__(cls, _core_schema: CoreSchema, handler: GetJsonSchemaHandler):
        return {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}

    @classmethod
    def validate(cls, value) -> Fraction:
        return parse_rational(value)
