import pandas as pd
import os
from datetime import datetime
from typing import Optional

from src.utils.config import get_logging_config

COLUMNS = ["timestamp", "graph", "algo", "n", "m", "internal_weight", "total_weight", "bound", "ratio"]


def log_solve_result(solution, graph_name: str, path: Optional[str] = None) -> pd.DataFrame:
    """Append one solve to the run log CSV and return the written row"""
    path = path or get_logging_config()['run_log_path']
    now = datetime.now().strftime("%Y-%m-%d %H:%M:%S")
    ratio = solution.ratio

    new_row = pd.DataFrame(
        [{
            "timestamp": now,
            "graph": graph_name,
            "algo": solution.algorithm_tag,
            "n": solution.n,
            "m": solution.m,
            "internal_weight": solution.internal_weight,
            "total_weight": solution.total_weight,
            "bound": f"{solution.guarantee.numerator}/{solution.guarantee.denominator}",
            "ratio": round(float(ratio), 4) if ratio is not None else None,
        }],
        columns=COLUMNS,
    )

    directory = os.path.dirname(path)
    if directory and not os.path.exists(directory):
        os.makedirs(directory)

    if not os.path.exists(path):
        new_row.to_csv(path, index=False)
    else:
        new_row.to_csv(path, mode="a", header=False, index=False)

    print(
        f"📊 Logged: {now} | {graph_name} | {solution.algorithm_tag} | "
        f"internal {solution.internal_weight}/{solution.total_weight}"
    )
    return new_row
