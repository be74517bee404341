"""Shared BaseModel with the common pydantic configuration.

Every domain record in gencayley is an immutable value: models forbid
extra fields and are frozen, so they hash and can be shared between
workers. A `before` validator turns tuples-of-lists style inputs coming
from JSON (lists) into tuples for the fields that expect them.
"""

from __future__ import annotations

from typing import Any

from pydantic import BaseModel, ConfigDict, model_validator


class GCModel(BaseModel):
    """Base pydantic model for all gencayley data structures.

    Configures pydantic to:
    - Forbid extra fields not defined in the model
    - Freeze instances (hashable, safe to share)
    - Normalize JSON lists to tuples before validation
    """

    model_config = ConfigDict(
        extra="forbid",
        frozen=True,
    )

    @model_validator(mode="before")
    @classmethod
    def _normalize_sequences(cls, values: Any):
        """Before-validation hook.

        Convert list values to tuples so round-tripped JSON payloads compare
        equal to the models they came from.
        """
        if not isinstance(values, dict):
            return values

        def normalize(value):
            if isinstance(value, list):
                return tuple(normalize(item) for item in value)
            return value

        return {k: normalize(v) for k, v in values.items()}
