# -*- coding: utf-8 -*-

from pathlib import Path
from typing import Any, Dict, List, Union

import orjson

from tropical_spectra.core.scalar import format_scalar
from tropical_spectra.core.textio import write_vector
from tropical_spectra.eigen.basis import EigenBasis

MANIFEST_SUFFIX = ".manifest.json"


def column_path(prefix: Union[str, Path], index: int) -> Path:
    return Path(f"{prefix}.col{index}.vec")


def manifest_path(prefix: Union[str, Path]) -> Path:
    return Path(f"{prefix}{MANIFEST_SUFFIX}")


def eigenbasis_manifest(basis: EigenBasis, prefix: Union[str, Path]) -> Dict[str, Any]:
    columns: List[Dict[str, Any]] = list()
    for k, representative in enumerate(basis.representatives):
        columns.append(
            {
                "index": k,
                "file": column_path(prefix, k).name,
                "representative": representative,
                "class": list(basis.classes[k]),
            }
        )
    return {
        "lambda": format_scalar(basis.lam),
        "eps": basis.eps,
        "columns": columns,
    }


def export_eigenbasis(basis: EigenBasis, prefix: Union[str, Path]) -> List[Path]:
    """
    Write one vector file per basis column and a JSON manifest next to them.

    Returns the written paths, manifest last.
    """

    written = list()
    for k, column in enumerate(basis.columns):
        path = column_path(prefix, k)
        node = basis.representatives[k]
        comment = f"eigenvector column {k}, representative node {node}"
        write_vector(path, column, comment)
        written.append(path)

    manifest = manifest_path(prefix)
    manifest.write_bytes(
        orjson.dumps(eigenbasis_manifest(basis, prefix), option=orjson.OPT_INDENT_2)
    )
    written.append(manifest)
    return written
