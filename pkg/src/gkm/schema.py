"""Pydantic models of the JSON graph document."""

from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, PositiveInt


class EdgeEntry(BaseModel):
    """One undirected edge; ``weight`` belongs to the from->to dart."""

    model_config = ConfigDict(populate_by_name=True, extra="forbid")

    id: str = Field(..., min_length=1)
    from_: str = Field(..., alias="from")
    to: str
    weight: List[int] = Field(..., min_length=1)
    reverse_weight: Optional[List[int]] = Field(
        default=None, description="Weight of the to->from dart, must be -weight"
    )


class ConnectionEntry(BaseModel):
    """Connection bijection along the from->to dart of edge ``along``."""

    model_config = ConfigDict(extra="forbid")

    along: str
    map: List[Tuple[str, str]]


class GraphDocument(BaseModel):
    """Top-level graph document."""

    model_config = ConfigDict(extra="forbid")

    torus_rank: PositiveInt
    dimension: PositiveInt
    vertices: List[str] = Field(..., min_length=1)
    edges: List[EdgeEntry]
    connection: Optional[List[ConnectionEntry]] = None
