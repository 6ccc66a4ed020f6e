class LatticeWalksBase:
    """
    Base interface implementation for the commands that drive walk counting,
    spectral moments, density sampling and the verification suites.
    Every method takes a json request string and returns a json string.
    Failures come back as {"error": "<message>"}.
    Every successful response echoes its fully resolved request under "params".
    """

    # closed-walk table of a named lattice
    def cmd_walks(self, request: str) -> str:
        """
        :param request: A json string with the walk request
        {
          "kind" : "<lattice kind, e.g. halfplane>",
          "mmax" : <largest walk length>,
          "n" : <strip width, strip only>,
          "k" : <diamond side, diamond only>,
          "l" : <diamond side, diamond only>,
          "compare" : <true to add the closed form column, default true>,
          "radius_budget" : <vertex budget for the ball, optional>
        }
        :return: A json string with the response
        {
          "params" : {...},
          "columns" : ["m", "ball_count", "closed_form", "match"],
          "rows" : [["4", "12", "12", true], ...]
        }

        Constraint:
            * mmax can be at most 24 for 3-D kinds and 40 otherwise
            * counts are exact decimal strings
        """
        pass

    # moment table of a spectral distribution
    def cmd_moments(self, request: str) -> str:
        """
        :param request: A json string with the moment request
        {
          "kind" : "<arcsine|semicircle|aa|wa|ww or a lattice kind>",
          "mmax" : <largest moment order>,
          "n" : <...>, "k" : <...>, "l" : <...>
        }
        :return: A json string with the response
        {
          "params" : {...},
          "columns" : ["m", "moment"],
          "rows" : [["0", "1"], ["1", "0"], ...]
        }

        Constraint:
            * exact moments are integers, the rest have 15 significant digits
        """
        pass

    # closed-form density samples
    def cmd_density(self, request: str) -> str:
        """
        :param request: A json string with the density request
        {
          "kind" : "<aa|wa|ww>",
          "grid" : <number of uniform samples on [-4, 4]>
        }
        :return: A json string with the response
        {
          "params" : {...},
          "columns" : ["x", "density"],
          "rows" : [["-4", "0"], ..., ["0", "inf"], ...]
        }

        Constraint:
            * grid must be at least 2
        """
        pass

    # run a verification suite
    def cmd_verify(self, request: str) -> str:
        """
        :param request: A json string with the suite to run
        {
          "suite" : "<identity|iso|coincidence|density|path-spectrum|walks|products|all>",
          "tol" : <override for floating point tolerances, optional>,
          "radius_budget" : <vertex budget for balls, optional>
        }
        :return: A json string with the response
        {
          "params" : {...},
          "suite" : "<suite>",
          "checks" : [{"name": "...", "expected": ..., "actual": ..., "tol": ..., "pass": true}],
          "pass" : <true iff every check passed>
        }
        """
        pass

    # connected components of a product of two paths
    def cmd_components(self, request: str) -> str:
        """
        :param request: A json string with the product
        {
          "kind" : "<kronecker|cartesian, default kronecker>",
          "k" : <vertices of the first path>,
          "l" : <vertices of the second path>
        }
        :return: A json string with the response
        {
          "params" : {...},
          "count" : <number of components>,
          "components" : [{"size": <vertices>, "edges": <edges>, "vertices": ["0,0", ...]}],
          "edge_list" : "# dim=2 root=0,0\n0,0 -- 1,1\n..."
        }
        """
        pass

    # check a built-in isomorphism on balls
    def cmd_iso(self, request: str) -> str:
        """
        :param request: A json string with the map to check
        {
          "kind" : "<zcz|strip|halfplane|diamond|wedge|z3|bcc>",
          "mmax" : <walk length the balls must support, radius is mmax // 2>,
          "n" : <...>, "k" : <...>, "l" : <...>,
          "radius_budget" : <vertex budget for balls, optional>
        }
        :return: A json string with the response
        {
          "params" : {...},
          "map" : "<map name>",
          "radius" : <ball radius>,
          "ok" : <true if the map is an isomorphism on the balls>,
          "source_vertices" : <...>, "target_vertices" : <...>, "edges_checked" : <...>,
          "violation" : "<first violation or null>",
          "witness" : ["<vertex>", ...]
        }
        """
        pass
