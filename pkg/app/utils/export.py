import json
import logging
import math
from pathlib import Path
from typing import Any, Dict, Sequence, Type

import pandas as pd
from pydantic import BaseModel

logger = logging.getLogger(__name__)


def write_rows_csv(rows: Sequence[BaseModel], schema: Type[BaseModel], path: Path) -> Path:
    """Write rows with the schema's fields as header, in declared order.

    Infinite floats come out as the literal tokens "inf" and "-inf".
    """
    columns = list(schema.model_fields)
    frame = pd.DataFrame([row.model_dump() for row in rows], columns=columns)
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(path, index=False, encoding="utf-8", lineterminator="\n")
    logger.info("Wrote %d rows to %s", len(frame), path)
    return path


def _json_safe(value: Any) -> Any:
    if isinstance(value, float) and math.isinf(value):
        return "inf" if value > 0 else "-inf"
    if isinstance(value, dict):
        return {key: _json_safe(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(item) for item in value]
    return value


def write_summary_json(summary: Dict[str, BaseModel], path: Path) -> Path:
    payload = {key: _json_safe(model.model_dump()) for key, model in summary.items()}
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
    logger.info("Wrote summary for %d coin biases to %s", len(payload), path)
    return path


def summary_path_for(csv_path: Path) -> Path:
    return Path(csv_path).with_suffix(".json")
