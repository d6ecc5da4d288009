"""Shared test helpers: body construction, independent oracles, fixtures."""

from __future__ import annotations

import random

from innofuse import BodyOfEvidence, FocalElement, Interval


def make_body(name: str, elements: list[tuple[float, float, float]]) -> BodyOfEvidence:
    return BodyOfEvidence(name, tuple(
        FocalElement(Interval(lower, upper), mass)
        for lower, upper, mass in elements
    ))


# --- independent oracles -------------------------------------------------
# Deliberately plain implementations of the definitions, kept separate from
# the package code paths they check.

def oracle_overlaps(a: tuple[float, float], b: tuple[float, float]) -> bool:
    return max(a[0], b[0]) <= min(a[1], b[1])


def oracle_belief(body: BodyOfEvidence, query: tuple[float, float]) -> float:
    total = 0.0
    for element in body.focal_elements:
        if query[0] <= element.interval.lower and element.interval.upper <= query[1]:
            total += element.mass
    return total


def oracle_plausibility(body: BodyOfEvidence, query: tuple[float, float]) -> float:
    total = 0.0
    for element in body.focal_elements:
        bounds = (element.interval.lower, element.interval.upper)
        if oracle_overlaps(bounds, query):
            total += element.mass
    return total


def oracle_combine(body_a: BodyOfEvidence, body_b: BodyOfEvidence):
    """Brute-force double loop over all pairs: overlapping products pool on
    the union of bounds, disjoint products sum into conflict, survivors are
    rescaled by 1 / (1 - conflict).  Returns (mass_by_interval, conflict, k)
    or None on total conflict."""
    pooled: dict[tuple[float, float], float] = {}
    conflict = 0.0
    for fa in body_a.focal_elements:
        for fb in body_b.focal_elements:
            a = (fa.interval.lower, fa.interval.upper)
            b = (fb.interval.lower, fb.interval.upper)
            product = fa.mass * fb.mass
            if oracle_overlaps(a, b):
                union = (min(a[0], b[0]), max(a[1], b[1]))
                pooled[union] = pooled.get(union, 0.0) + product
            else:
                conflict += product
    if not pooled:
        return None
    k = 1.0 / (1.0 - conflict)
    return {iv: m * k for iv, m in pooled.items()}, conflict, k


def random_body(rng: random.Random, name: str, max_elements: int = 4) -> BodyOfEvidence:
    """Random body on a two-decimal grid with exactly-normalized masses."""
    count = rng.randint(1, max_elements)
    intervals: set[tuple[float, float]] = set()
    while len(intervals) < count:
        lower = rng.randint(0, 100)
        upper = rng.randint(lower, 100)
        intervals.add((lower / 100.0, upper / 100.0))
    weights = [rng.randint(1, 9) for _ in intervals]
    total = sum(weights)
    return BodyOfEvidence(name, tuple(
        FocalElement(Interval(lower, upper), weight / total)
        for (lower, upper), weight in zip(sorted(intervals), weights)
    ))


# --- the completed export-fragment document ------------------------------

def fragment_document() -> dict:
    """A five-source, ten-component search-statistics export, with every
    list populated to its declared count."""
    component_names = [
        "Электрический глаз",
        "Ген-активированный материал для регенерации тканей",
        "Имплантация миниконтур",
        "Лечение пародонта",
        "Электронный индикатор уровня",
    ] + [f"Компонент № {k}" for k in range(6, 11)]
    groups = [
        {"GroupName": "Yandex", "ExperCount": 16},
        {"GroupName": "ЕГИСУ НИОКТР", "ExperCount": 16},
        {"GroupName": "Google", "ExperCount": 16},
        {"GroupName": "Bing", "ExperCount": 16},
        {"GroupName": "DuckDuckGo", "ExperCount": 16},
    ]
    scale = [
        {"Lingvo": f"{5 * k}–{5 * k + 5} %",
         "LBound": round(0.05 * k, 2), "UBound": round(0.05 * (k + 1), 2)}
        for k in range(20)
    ]
    by_term = {entry["Lingvo"]: entry for entry in scale}
    results = [dict(by_term[term]) for term in ("95–100 %", "60–65 %", "0–5 %")]
    for k in range(3, 800):
        results.append(dict(scale[(k * 7 + 3) % 20]))
    return {
        "ComponentNumber": 10,
        "IndicatorNumber": 1,
        "ExpGroupsNumber": 5,
        "EstimatesNumber": 20,
        "RoundDigsNumber": 2,
        "InterviewNumber": 800,
        "ComponentNames": component_names,
        "IndicatorNames": ["Нормированный показатель КН4"],
        "ExpertGroupes": groups,
        "EstimateScale": scale,
        "InterviewRslt": results,
    }
