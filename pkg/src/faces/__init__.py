"""Totally geodesic faces and the face poset."""

from .face import ClosureFailure, Face, span_face, vertex_face, whole_graph_face
from .poset import FacePoset, enumerate_faces, face_subgraph, lower_ideal, skeleton

__all__ = [
    "ClosureFailure",
    "Face",
    "FacePoset",
    "enumerate_faces",
    "face_subgraph",
    "lower_ideal",
    "skeleton",
    "span_face",
    "vertex_face",
    "whole_graph_face",
]
