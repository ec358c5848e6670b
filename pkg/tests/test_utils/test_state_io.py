import io
import json
import numpy as np
import unittest

import models.cluster.coordinates as coords
import models.seven_mode.canonical as canonical7
import models.seven_mode.classification as classification7
import numerical_methods.multilinear.tensor as tensor
import utils.config as config
import utils.errors as errors
import utils.global_types as global_types
import utils.misc as misc
import utils.state_io as state_io


def state_doc(*entries, modes: int = 6) -> dict:
    return {"fermions": 3, "modes": modes, "amplitudes": list(entries)}


class StateFiles(unittest.TestCase):

    def test_1(self):
        """Files use 1-based labels; missing im means real."""
        t = state_io.state_from_json(state_doc(
            {"indices": [1, 2, 3], "re": 1.0},
            {"indices": [4, 5, 6], "re": 0.0, "im": 2.0}))
        self.assertEqual(t[(0, 1, 2)], 1)
        self.assertEqual(t[(3, 4, 5)], 2j)
        doc = state_io.state_to_json(t)
        self.assertEqual(doc["modes"], 6)
        self.assertEqual([e["indices"] for e in doc["amplitudes"]],
                         [[1, 2, 3], [4, 5, 6]])

    def test_2(self):
        """Written and read back through a stream."""
        rng = np.random.default_rng(140)
        t = tensor.AntisymTensor(3, 7, misc.random_complex(35, rng))
        stream = io.StringIO()
        state_io.write_state(t, stream)
        stream.seek(0)
        self.assertTrue(state_io.read_state(stream).distance(t) == 0)

    def test_3(self):
        bad_docs = [
            {"modes": 6},
            {"fermions": 3, "modes": 2},
            state_doc({"indices": [1, 2], "re": 1.0}),
            state_doc({"indices": [1, 3, 2], "re": 1.0}),
            state_doc({"indices": [0, 1, 2], "re": 1.0}),
            state_doc({"indices": [4, 5, 7], "re": 1.0}),
            state_doc({"indices": [1, 2, 3], "re": 1.0},
                      {"indices": [1, 2, 3], "re": 2.0}),
            state_doc({"indices": [1, 2, 3], "im": 1.0}),
            state_doc({"indices": [1, 2, 3], "re": float("nan")}),
        ]
        for doc in bad_docs:
            with self.assertRaises(errors.StateFileError):
                state_io.state_from_json(doc)
        for text in ("{", "[1, 2]"):
            with self.assertRaises(errors.StateFileError):
                state_io.read_state(io.StringIO(text))


class Coordinates(unittest.TestCase):

    def test_1(self):
        """Blocks are stored with their kind; rebuilt objects agree."""
        rng = np.random.default_rng(141)
        t = tensor.AntisymTensor(3, 7, misc.random_complex(35, rng))
        ci = coords.ci_from_tensor(t)
        doc = json.loads(json.dumps(state_io.coordinates_to_json(ci)))
        self.assertEqual(doc["kind"], "ci7")
        back = state_io.coordinates_from_json(doc)
        self.assertTrue(np.max(np.abs(back.as_array() - ci.as_array())) == 0)

    def test_2(self):
        with self.assertRaises(errors.StateFileError):
            state_io.coordinates_from_json({"kind": "cc8"})
        with self.assertRaises(errors.StateFileError):
            state_io.coordinates_from_json({"kind": "ci6"})
        with self.assertRaises(errors.StateError):
            state_io.coordinates_kind(np.eye(3))


class Reports(unittest.TestCase):

    def test_1(self):
        """Reports flatten to plain JSON; labels are strings."""
        report = classification7.classify7(canonical7.canonical_state7(
            global_types.SevenModeClass.VI))
        doc = json.loads(json.dumps(state_io.report_to_json(report)))
        self.assertEqual(doc["label"], "VI-or-VII")
        self.assertEqual(doc["rank_n"], 1)
        envelope = state_io.envelope("classify", {"class": "X"},
                                     config.DEFAULT_TOLERANCE)
        self.assertEqual(envelope["version"], config.VERSION)
        self.assertEqual(envelope["tol"]["tau"], config.DEFAULT_TAU)

    def test_2(self):
        self.assertEqual(state_io.to_jsonable(np.int64(3)), 3)
        self.assertEqual(state_io.to_jsonable(1 + 2j), {"re": 1, "im": 2})
        self.assertEqual(state_io.to_jsonable(
            global_types.SixModeClass.BISEP), "BISEP")
        with self.assertRaises(errors.StateError):
            state_io.to_jsonable(object())


if __name__ == '__main__':

    stream = io.StringIO()
    state_io.write_state(canonical7.canonical_state7(
        global_types.SevenModeClass.X), stream)
    print(stream.getvalue())

    unittest.main()
