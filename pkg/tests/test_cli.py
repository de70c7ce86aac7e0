import io

import pytest

from parlorproofs.cli import run
from parlorproofs.fixtures import fixture_text


def invoke(*args):
    out = io.StringIO()
    code = run(list(args), out=out)
    return code, out.getvalue()


@pytest.fixture
def konigsberg_file(tmp_path):
    path = tmp_path / "konigsberg.graph"
    path.write_text(fixture_text("konigsberg.graph"))
    return str(path)


@pytest.fixture
def cycle_file(tmp_path):
    path = tmp_path / "cycle.graph"
    path.write_text("vertex A\nvertex B\nvertex C\n"
                    "edge A B\nedge B C\nedge C A\n")
    return str(path)


class TestPokerCommands:
    def test_count_single_category(self):
        code, out = invoke("poker", "count", "full-house")
        assert code == 0
        assert out.strip() == "full-house: 3744"

    def test_count_all(self):
        code, out = invoke("poker", "count", "--all")
        assert code == 0
        assert len(out.strip().splitlines()) == 10
        assert "royal-flush: 4" in out

    def test_prob_shows_exact_rationals(self):
        code, out = invoke("poker", "prob", "full-house")
        assert code == 0
        assert "3744/2598960" in out and "6/4165" in out

    def test_variant_deck_flags(self):
        code, out = invoke("poker", "count", "--values", "7", "--suits", "3",
                           "four-of-a-kind")
        assert code == 0
        assert out.strip() == "four-of-a-kind: 0"

    def test_wild_deck_count_is_a_usage_error(self):
        code, _ = invoke("poker", "count", "--wilds", "1", "pair")
        assert code == 2

    def test_winner_scenario(self):
        code, out = invoke("poker", "winner", "Bond=full-house",
                           "Rogers=flush", "Ryan=straight")
        assert code == 0
        assert out.strip() == \
            "Bond wins (3744/2598960 < 5108/2598960 < 10200/2598960)"

    def test_winner_tie(self):
        code, out = invoke("poker", "winner", "A=pair", "B=pair")
        assert code == 0
        assert "Tie: A, B" in out

    def test_winner_impossible_entry(self):
        code, out = invoke("poker", "winner", "--suits", "2", "A=full-house")
        assert code == 1
        assert "excluded" in out and "no winner" in out

    def test_verify_small_deck(self):
        code, out = invoke("poker", "verify", "--values", "5", "--suits", "2")
        assert code == 0
        assert out.count("PASS") == 11  # ten categories plus overall
        assert "overall: PASS" in out

    def test_verify_csv(self):
        code, out = invoke("poker", "verify", "--values", "5", "--suits", "2",
                           "--csv")
        assert code == 0
        assert out.splitlines()[0] == "category,closed_form,oracle,status"

    def test_proof_document(self):
        code, out = invoke("poker", "proof", "full-house")
        assert code == 0
        assert "C(13,1)·C(4,3)·C(12,1)·C(4,2) = 3744" in out

    def test_unknown_category(self):
        code, _ = invoke("poker", "count", "royal-straight")
        assert code == 2

    def test_invalid_deck(self):
        code, _ = invoke("poker", "count", "--values", "2", "--suits", "2",
                         "pair")
        assert code == 2


class TestGraphCommands:
    def test_analyze_konigsberg(self, konigsberg_file):
        code, out = invoke("graph", "analyze", konigsberg_file)
        assert code == 0
        assert out.strip() == "NoTrail: 4 vertices of odd degree"

    def test_analyze_cycle(self, cycle_file):
        code, out = invoke("graph", "analyze", cycle_file)
        assert code == 0
        assert out.startswith("Circuit")

    def test_trail_on_cycle(self, cycle_file):
        code, out = invoke("graph", "trail", cycle_file)
        assert code == 0
        assert "->" in out

    def test_trail_on_konigsberg_is_negative(self, konigsberg_file):
        code, out = invoke("graph", "trail", konigsberg_file)
        assert code == 1
        assert "NoTrail" in out

    def test_proof_on_konigsberg(self, konigsberg_file):
        code, out = invoke("graph", "proof", konigsberg_file)
        assert code == 0
        assert "4 vertices and 7 edges" in out

    def test_proof_on_trail_graph_is_negative(self, cycle_file):
        code, _ = invoke("graph", "proof", cycle_file)
        assert code == 1

    def test_missing_file(self):
        code, _ = invoke("graph", "analyze", "/nonexistent.graph")
        assert code == 2

    def test_malformed_file(self, tmp_path):
        path = tmp_path / "bad.graph"
        path.write_text("nonsense\n")
        code, _ = invoke("graph", "analyze", str(path))
        assert code == 2


class TestRubricCommand:
    def test_score_full_marks(self, tmp_path):
        rubric_path = tmp_path / "poker.rubric"
        rubric_path.write_text(fixture_text("poker_rubric.rubric"))
        marks = "\n".join([
            'award "Restate the problem" 5',
            'award "State the paper objective" 4',
            'award "State problem-solving methods used" 1',
            'award "Provide a brief history of poker, at most 5 lines" 10',
            'award "Describe the rules of poker" 10',
            'award "Restate player hands" 10',
            'award "Use Claim-Proof form" 2',
            'award "Accurately find probability" 3',
            'award "Write clearly and correctly" 4',
            'award "Utilize C(52,5)" 1',
            'award "Summarize results" 4',
            'award "State a new question" 4',
            'award "State another new question" 2',
        ])
        marks_path = tmp_path / "marks.txt"
        marks_path.write_text(marks)
        code, out = invoke("rubric", "score", str(rubric_path), str(marks_path))
        assert code == 0
        assert "total: 100/100" in out

    def test_bad_rubric_file(self, tmp_path):
        rubric_path = tmp_path / "bad.rubric"
        rubric_path.write_text("rubric point X max=10\nsection S\n"
                               'criterion "c" points=9\n')
        marks_path = tmp_path / "marks.txt"
        marks_path.write_text('award "c" 9\n')
        code, _ = invoke("rubric", "score", str(rubric_path), str(marks_path))
        assert code == 2


class TestUsage:
    def test_unknown_subcommand(self):
        assert invoke("poker", "shuffle")[0] == 2

    def test_unknown_group(self):
        assert invoke("blackjack")[0] == 2

    def test_no_arguments(self):
        assert invoke()[0] == 2
