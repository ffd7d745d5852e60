import pickle
import json
import os
import datetime
import logging
from dataclasses import asdict, is_dataclass

logger = logging.getLogger(__name__)

# --- GENERAL HANDLERS (JSON & PICKLE) ---

def json_converter(o):
    """Convert datetime / numpy / dataclass values for ``json.dump``."""
    if isinstance(o, (datetime.date, datetime.datetime)):
        return o.isoformat()
    if hasattr(o, 'item'):  # numpy scalar
        return o.item()
    if hasattr(o, 'tolist'):  # numpy array
        return o.tolist()
    if is_dataclass(o):
        return asdict(o)
    if isinstance(o, (set, frozenset)):
        return sorted(o)
    return str(o)


def _convert_keys_to_string(data):
    """Recursively turn tuple/int dictionary keys into strings (JSON keys must be strings)."""
    if is_dataclass(data) and not isinstance(data, type):
        data = asdict(data)
    if isinstance(data, dict):
        return {str(k): _convert_keys_to_string(v) for k, v in data.items()}
    if isinstance(data, (list, tuple)):
        return [_convert_keys_to_string(i) for i in data]
    return data


def save_report(report, filename="report.json", folder='result', format='json'):
    """
    Save a verification or benchmark report.

    format: 'pickle' (binary, keeps the object) or 'json' (text, readable).
    Returns the path written.
    """
    os.makedirs(folder, exist_ok=True)
    file_path = os.path.join(folder, filename)

    if format == 'pickle':
        with open(file_path, "wb") as f:
            pickle.dump(report, f)
    elif format == 'json':
        if not file_path.endswith('.json'):
            file_path = os.path.splitext(file_path)[0] + '.json'
        with open(file_path, "w", encoding='utf-8') as f:
            json.dump(_convert_keys_to_string(report), f, indent=4, default=json_converter)
    else:
        raise ValueError(f"unknown report format {format!r}")

    logger.info("report saved to %s", file_path)
    return file_path


def load_report(filename="report.json", folder='result'):
    file_path = os.path.join(folder, filename)
    if not os.path.exists(file_path):
        raise FileNotFoundError(f"File {file_path} does not exist.")

    if file_path.endswith('.json'):
        with open(file_path, "r", encoding='utf-8') as f:
            return json.load(f)
    with open(file_path, "rb") as f:
        return pickle.load(f)


# --- ORACLE HANDLERS ---

def save_oracle(oracle, path):
    """Pickle a preprocessed oracle so later queries skip preprocessing."""
    folder = os.path.dirname(path)
    if folder:
        os.makedirs(folder, exist_ok=True)
    with open(path, "wb") as f:
        pickle.dump(oracle, f, protocol=pickle.HIGHEST_PROTOCOL)
    logger.info("oracle saved to %s", path)
    return path


def load_oracle(path):
    if not os.path.exists(path):
        raise FileNotFoundError(f"File {path} not found.")
    with open(path, "rb") as f:
        oracle = pickle.load(f)
    logger.info("loaded oracle from %s", path)
    return oracle
