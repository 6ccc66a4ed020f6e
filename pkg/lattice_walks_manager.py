import functools
import json
import logging

import config
from elliptic_density import DensityKind, density_rows
from errors import InvalidParameter, LatticeWalksError
from graphs import cartesian, connected_components, export_edge_list, format_vertex, kronecker, path_graph
from isomorphism import BUILTIN_MAPS, diamond_map, strip_map, verify_isomorphism
from lattice_catalog import LatticeSpec
from lattice_walks_base import LatticeWalksBase
from spectral import moment_rows, resolve_distribution
from verification_suites import SUITES, run_suite
from walks import closed_form_walks, walk_table

logger = logging.getLogger(__name__)

SHAPE_KEYS = ("n", "k", "l")


def _responds_with_json(method):
    @functools.wraps(method)
    def wrapper(self, request: str) -> str:
        try:
            return json.dumps(method(self, request))
        except json.JSONDecodeError as exc:
            return json.dumps({"error": f"Request is not valid json: {exc}"})
        except LatticeWalksError as exc:
            logger.debug("%s failed: %s", method.__name__, exc)
            return json.dumps({"error": str(exc)})

    return wrapper


def _parse_request(request: str, defaults: dict) -> dict:
    data = json.loads(request)
    if not isinstance(data, dict):
        raise InvalidParameter("Request must be a json object")
    unknown = sorted(set(data) - set(defaults))
    if unknown:
        raise InvalidParameter(f"Unknown request keys: {', '.join(unknown)}")
    return {key: data.get(key, default) for key, default in defaults.items()}


def _integer(params: dict, key: str, minimum: int | None = None, required: bool = True) -> int | None:
    value = params[key]
    if value is None:
        if required:
            raise InvalidParameter(f"{key} is required")
        return None
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidParameter(f"{key} must be an integer, got {value!r}")
    if minimum is not None and value < minimum:
        raise InvalidParameter(f"{key} must be >= {minimum}, got {value}")
    return value


def _required_text(params: dict, key: str) -> str:
    value = params[key]
    if not isinstance(value, str) or not value:
        raise InvalidParameter(f"{key} is required")
    return value


class LatticeWalksManager(LatticeWalksBase):
    def __init__(self, vertex_budget: int | None = None):
        self.vertex_budget = vertex_budget

    def _resolve_budget(self, params: dict) -> int:
        override = _integer(params, "radius_budget", required=False)
        params["radius_budget"] = config.vertex_budget(override if override is not None else self.vertex_budget)
        return params["radius_budget"]

    def _shape(self, params: dict) -> tuple[int | None, ...]:
        return tuple(_integer(params, key, required=False) for key in SHAPE_KEYS)

    @_responds_with_json
    def cmd_walks(self, request: str) -> dict:
        params = _parse_request(request, {"kind": None, "mmax": None, "n": None, "k": None, "l": None,
                                          "compare": True, "radius_budget": None})
        spec = LatticeSpec.parse(_required_text(params, "kind"), *self._shape(params))
        m_max = _integer(params, "mmax", minimum=0)
        cap = config.mmax_cap(spec.dimension)
        if m_max > cap:
            raise InvalidParameter(f"mmax {m_max} exceeds the cap of {cap} for {spec.dimension}-dimensional lattices")
        if not isinstance(params["compare"], bool):
            raise InvalidParameter("compare must be true or false")
        budget = self._resolve_budget(params)

        graph, root = spec.build()
        table = walk_table(graph, root, m_max, budget)
        columns = ["m", "ball_count"]
        rows = []
        for (m, count), row in zip(table.entries, table.rows()):
            if params["compare"]:
                expected = closed_form_walks(spec, m)
                row += [str(expected), expected == count]
            rows.append(row)
        if params["compare"]:
            columns += ["closed_form", "match"]
        return {"params": params, "columns": columns, "rows": rows}

    @_responds_with_json
    def cmd_moments(self, request: str) -> dict:
        params = _parse_request(request, {"kind": None, "mmax": None, "n": None, "k": None, "l": None})
        distribution = resolve_distribution(_required_text(params, "kind"), *self._shape(params))
        m_max = _integer(params, "mmax", minimum=0)
        rows = moment_rows(distribution, m_max)
        return {"params": params, "columns": ["m", "moment"], "rows": rows}

    @_responds_with_json
    def cmd_density(self, request: str) -> dict:
        params = _parse_request(request, {"kind": None, "grid": None})
        kind = _required_text(params, "kind")
        try:
            kernel = DensityKind(kind)
        except ValueError:
            raise InvalidParameter(f"Unknown density kind {kind!r}; choose one of aa, wa, ww") from None
        grid = _integer(params, "grid", minimum=2)
        rows = density_rows(kernel, grid)
        return {"params": params, "columns": ["x", "density"], "rows": rows}

    @_responds_with_json
    def cmd_verify(self, request: str) -> dict:
        params = _parse_request(request, {"suite": "all", "tol": None, "radius_budget": None})
        suite = _required_text(params, "suite")
        if suite != "all" and suite not in SUITES:
            raise InvalidParameter(f"Unknown suite {suite!r}; choose one of {', '.join([*SUITES, 'all'])}")
        tol = params["tol"]
        if tol is not None and (isinstance(tol, bool) or not isinstance(tol, (int, float)) or tol <= 0):
            raise InvalidParameter(f"tol must be a positive number, got {tol!r}")
        budget = self._resolve_budget(params)

        report = run_suite(suite, tol, budget).to_dict()
        rows = [[check["name"], check["expected"], check["actual"], check["tol"], check["pass"]]
                for check in report["checks"]]
        return {"params": params, **report, "columns": ["name", "expected", "actual", "tol", "pass"], "rows": rows}

    @_responds_with_json
    def cmd_components(self, request: str) -> dict:
        params = _parse_request(request, {"kind": "kronecker", "k": None, "l": None})
        product = {"kronecker": kronecker, "cartesian": cartesian}.get(params["kind"])
        if product is None:
            raise InvalidParameter(f"Unknown product {params['kind']!r}; choose kronecker or cartesian")
        graph = product(path_graph(_integer(params, "k", minimum=1)), path_graph(_integer(params, "l", minimum=1)))

        components = connected_components(graph)
        details = [
            {"size": len(c), "edges": len(c.edges()), "vertices": [format_vertex(v) for v in c.vertices]}
            for c in components
        ]
        rows = [[str(i), str(d["size"]), str(d["edges"])] for i, d in enumerate(details)]
        return {"params": params, "count": len(components), "components": details,
                "edge_list": export_edge_list(graph), "columns": ["component", "size", "edges"], "rows": rows}

    @_responds_with_json
    def cmd_iso(self, request: str) -> dict:
        params = _parse_request(request, {"kind": None, "mmax": None, "n": None, "k": None, "l": None,
                                          "radius_budget": None})
        name = _required_text(params, "kind")
        if name not in BUILTIN_MAPS:
            raise InvalidParameter(f"Unknown map {name!r}; choose one of {', '.join(BUILTIN_MAPS)}")
        if name == "strip":
            iso = strip_map(_integer(params, "n", minimum=2))
        elif name == "diamond":
            iso = diamond_map(_integer(params, "k", minimum=2), _integer(params, "l", minimum=2))
        else:
            iso = BUILTIN_MAPS[name]()
        radius = _integer(params, "mmax", minimum=0) // 2
        budget = self._resolve_budget(params)

        report = verify_isomorphism(iso, radius, budget).to_dict()
        columns = ["map", "radius", "ok", "source_vertices", "target_vertices", "edges_checked", "violation"]
        rows = [[report[c] if c != "violation" else (report[c] or "") for c in columns]]
        return {"params": params, **report, "columns": columns, "rows": rows}
