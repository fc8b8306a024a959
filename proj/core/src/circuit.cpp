#include "dasatom/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace dasatom {

namespace {

struct Token {
  enum class Kind {
    Identifier,
    Number,
    String,
    Symbol, // single-character punctuation
    End,
  };
  Kind kind = Kind::End;
  std::string text;
  int line = 1;
  int column = 1;
};

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space_and_comments();
    Token tok;
    tok.line = line_;
    tok.column = column_;
    if (pos_ >= text_.size()) {
      tok.kind = Token::Kind::End;
      return tok;
    }
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      tok.kind = Token::Kind::Identifier;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        tok.text.push_back(advance());
      }
      return tok;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      tok.kind = Token::Kind::Number;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E' ||
              ((text_[pos_] == '+' || text_[pos_] == '-') && !tok.text.empty() &&
               (tok.text.back() == 'e' || tok.text.back() == 'E')))) {
        tok.text.push_back(advance());
      }
      return tok;
    }
    if (c == '"') {
      tok.kind = Token::Kind::String;
      advance();
      while (pos_ < text_.size() && text_[pos_] != '"') {
        tok.text.push_back(advance());
      }
      if (pos_ >= text_.size()) {
        throw ParseError("unterminated string", tok.line, tok.column);
      }
      advance();
      return tok;
    }
    tok.kind = Token::Kind::Symbol;
    tok.text.push_back(advance());
    // "->" in measure statements
    if (tok.text == "-" && pos_ < text_.size() && text_[pos_] == '>') {
      tok.text.push_back(advance());
    }
    return tok;
  }

private:
  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && pos_ + 1 < text_.size() &&
                 text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') {
          advance();
        }
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

struct Operand {
  std::string reg;
  int index = -1; // -1 means whole-register broadcast
};

class Parser {
public:
  explicit Parser(std::string_view text) : lexer_(text) { shift(); }

  CzCircuit run() {
    CzCircuit circuit;
    bool qreg_seen = false;
    while (cur_.kind != Token::Kind::End) {
      if (cur_.kind != Token::Kind::Identifier) {
        fail("expected statement");
      }
      const Token head = cur_;
      if (head.text == "OPENQASM") {
        shift();
        expect(Token::Kind::Number, "version number");
        expect_symbol(";");
      } else if (head.text == "include") {
        shift();
        expect(Token::Kind::String, "include path");
        expect_symbol(";");
      } else if (head.text == "qreg") {
        shift();
        if (qreg_seen) {
          fail_at(head, "only one quantum register is supported");
        }
        qreg_seen = true;
        qreg_name_ = expect(Token::Kind::Identifier, "register name").text;
        expect_symbol("[");
        circuit.qubit_count = parse_int();
        expect_symbol("]");
        expect_symbol(";");
        qubit_count_hint_ = circuit.qubit_count;
      } else if (head.text == "creg") {
        shift();
        creg_name_ = expect(Token::Kind::Identifier, "register name").text;
        expect_symbol("[");
        parse_int();
        expect_symbol("]");
        expect_symbol(";");
      } else if (head.text == "barrier") {
        shift();
        skip_to_semicolon();
      } else if (head.text == "measure") {
        shift();
        skip_to_semicolon();
      } else if (head.text == "gate" || head.text == "opaque") {
        shift();
        skip_gate_declaration(head.text == "gate");
      } else {
        parse_application(circuit, qreg_seen);
      }
    }
    if (!qreg_seen) {
      throw ParseError("no quantum register declared", 1, 1);
    }
    return circuit;
  }

private:
  void parse_application(CzCircuit& circuit, bool qreg_seen) {
    const Token name = cur_;
    shift();
    if (cur_.kind == Token::Kind::Symbol && cur_.text == "(") {
      skip_parenthesized();
    }
    std::vector<Operand> operands;
    operands.push_back(parse_operand());
    while (cur_.kind == Token::Kind::Symbol && cur_.text == ",") {
      shift();
      operands.push_back(parse_operand());
    }
    expect_symbol(";");
    if (!qreg_seen) {
      fail_at(name, "gate before qreg declaration");
    }
    if (operands.size() >= 3) {
      fail_at(name, "unsupported gate arity " +
                        std::to_string(operands.size()) + " for '" +
                        name.text + "'");
    }
    if (operands.size() == 1) {
      validate_operand(name, operands[0], /*allow_broadcast=*/true);
      return; // single-qubit gates are stripped
    }
    if (name.text != "cz" && name.text != "cx") {
      fail_at(name, "unsupported two-qubit gate '" + name.text + "'");
    }
    for (const Operand& op : operands) {
      validate_operand(name, op, /*allow_broadcast=*/false);
    }
    if (operands[0].index == operands[1].index) {
      fail_at(name, "two-qubit gate on identical qubits q[" +
                        std::to_string(operands[0].index) + "]");
    }
    const int idx = static_cast<int>(circuit.gates.size());
    circuit.gates.push_back(
        CzGate{idx, operands[0].index, operands[1].index});
  }

  void validate_operand(const Token& at, const Operand& op,
                        bool allow_broadcast) {
    if (op.reg == creg_name_ && !creg_name_.empty()) {
      fail_at(at, "classical register in gate operands");
    }
    if (op.reg != qreg_name_) {
      fail_at(at, "unknown register '" + op.reg + "'");
    }
    if (op.index == -1) {
      if (!allow_broadcast) {
        fail_at(at, "two-qubit gates require indexed operands");
      }
      return;
    }
    if (op.index >= qubit_count_hint_) {
      fail_at(at, "qubit index " + std::to_string(op.index) +
                      " out of range for register of size " +
                      std::to_string(qubit_count_hint_));
    }
  }

  Operand parse_operand() {
    Operand op;
    op.reg = expect(Token::Kind::Identifier, "register operand").text;
    if (cur_.kind == Token::Kind::Symbol && cur_.text == "[") {
      shift();
      op.index = parse_int();
      expect_symbol("]");
    }
    return op;
  }

  int parse_int() {
    const Token tok = expect(Token::Kind::Number, "integer");
    for (char c : tok.text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        fail_at(tok, "expected integer, got '" + tok.text + "'");
      }
    }
    return std::stoi(tok.text);
  }

  void skip_parenthesized() {
    expect_symbol("(");
    int depth = 1;
    while (depth > 0) {
      if (cur_.kind == Token::Kind::End) {
        fail("unbalanced parentheses");
      }
      if (cur_.kind == Token::Kind::Symbol) {
        if (cur_.text == "(") {
          ++depth;
        } else if (cur_.text == ")") {
          --depth;
        }
      }
      shift();
    }
  }

  void skip_gate_declaration(bool may_have_body) {
    while (true) {
      if (cur_.kind == Token::Kind::End) {
        fail("unterminated gate declaration");
      }
      if (cur_.kind == Token::Kind::Symbol && cur_.text == ";") {
        shift();
        return;
      }
      if (may_have_body && cur_.kind == Token::Kind::Symbol &&
          cur_.text == "{") {
        int depth = 0;
        do {
          if (cur_.kind == Token::Kind::End) {
            fail("unterminated gate body");
          }
          if (cur_.kind == Token::Kind::Symbol) {
            if (cur_.text == "{") {
              ++depth;
            } else if (cur_.text == "}") {
              --depth;
            }
          }
          shift();
        } while (depth > 0);
        return;
      }
      shift();
    }
  }

  void skip_to_semicolon() {
    while (!(cur_.kind == Token::Kind::Symbol && cur_.text == ";")) {
      if (cur_.kind == Token::Kind::End) {
        fail("missing ';'");
      }
      shift();
    }
    shift();
  }

  Token expect(Token::Kind kind, const std::string& what) {
    if (cur_.kind != kind) {
      fail("expected " + what);
    }
    Token tok = cur_;
    shift();
    return tok;
  }

  void expect_symbol(const std::string& sym) {
    if (cur_.kind != Token::Kind::Symbol || cur_.text != sym) {
      fail("expected '" + sym + "'");
    }
    shift();
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, cur_.line, cur_.column);
  }

  [[noreturn]] static void fail_at(const Token& tok,
                                   const std::string& message) {
    throw ParseError(message, tok.line, tok.column);
  }

  void shift() { cur_ = lexer_.next(); }

  Lexer lexer_;
  Token cur_;
  std::string qreg_name_;
  std::string creg_name_;
  int qubit_count_hint_ = 0;
};

} // namespace

CzCircuit parse_qasm(std::string_view text) {
  Parser parser(text);
  return parser.run();
}

CzCircuit parse_qasm_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_qasm(buf.str());
}

CzCircuit layer_circuit(CzCircuit circuit) {
  std::vector<int> qubit_layer(static_cast<std::size_t>(circuit.qubit_count),
                               -1);
  circuit.layers.clear();
  for (const CzGate& gate : circuit.gates) {
    const int layer = 1 + std::max(qubit_layer[gate.a], qubit_layer[gate.b]);
    if (layer >= static_cast<int>(circuit.layers.size())) {
      circuit.layers.resize(static_cast<std::size_t>(layer) + 1);
    }
    circuit.layers[layer].push_back(gate.index);
    qubit_layer[gate.a] = layer;
    qubit_layer[gate.b] = layer;
  }
  return circuit;
}

Graph interaction_graph(const CzCircuit& circuit) {
  Graph graph(circuit.qubit_count);
  for (const CzGate& gate : circuit.gates) {
    graph.add_edge(gate.a, gate.b);
  }
  return graph;
}

Graph interaction_graph(const CzCircuit& circuit, int layer_begin,
                        int layer_end) {
  if (!circuit.layered()) {
    throw std::invalid_argument("interaction_graph: circuit not layered");
  }
  if (layer_begin < 0 || layer_end < layer_begin ||
      layer_end > circuit.layer_count()) {
    throw std::invalid_argument("interaction_graph: invalid layer interval");
  }
  Graph graph(circuit.qubit_count);
  for (int layer = layer_begin; layer < layer_end; ++layer) {
    for (int idx : circuit.layers[layer]) {
      graph.add_edge(circuit.gates[idx].a, circuit.gates[idx].b);
    }
  }
  return graph;
}

std::string dump_canonical(const CzCircuit& circuit) {
  std::ostringstream out;
  out << "qubits " << circuit.qubit_count << "\n";
  for (const CzGate& gate : circuit.gates) {
    out << "cz " << gate.a << " " << gate.b << "\n";
  }
  return out.str();
}

std::string to_qasm(const CzCircuit& circuit) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n"
      << "include \"qelib1.inc\";\n"
      << "qreg q[" << circuit.qubit_count << "];\n";
  for (const CzGate& gate : circuit.gates) {
    out << "cz q[" << gate.a << "],q[" << gate.b << "];\n";
  }
  return out.str();
}

} // namespace dasatom
