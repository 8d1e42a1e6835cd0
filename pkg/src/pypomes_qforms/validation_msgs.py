from typing import Final

__ERR_MSGS: Final[dict[int, dict[str, str]]] = {
    # omits the attribute 'code'
    100: {
        "en": "{}",
        "pt": "{}",
    },
    101: {
        "en": "{}",
        "pt": "{}",
    },
    102: {
        "en": "Unexpected error: {}",
        "pt": "Erro inesperado: {}",
    },
    143: {
        "en": "Invalid value {}: must be less than {}",
        "pt": "Valor {} inválido: deve ser menor que {}",
    },
    144: {
        "en": "Invalid value {}: must be greater than {}",
        "pt": "Valor {} inválido: deve ser maior que {}",
    },
    149: {
        "en": "Invalid value {}: must be {}",
        "pt": "Valor {} inválido: deve ser {}",
    },
    150: {
        "en": "Invalid value {}: must be one of {}",
        "pt": "Valor {} inválido: deve ser um de {}",
    },
    151: {
        "en": "Invalid value {}: must be in the range {}",
        "pt": "Valor {} inválido: deve estar no intervalo {}",
    },
    152: {
        "en": "Invalid value {}: must be type {}",
        "pt": "Valor {} inválido: deve ser do tipo {}",
    },
    153: {
        "en": "Invalid range {}: must be a..b, with {} <= a <= b",
        "pt": "Intervalo {} inválido: deve ser a..b, com {} <= a <= b",
    },
    154: {
        "en": "Unknown option {}: must be one of {}",
        "pt": "Opção {} desconhecida: deve ser uma de {}",
    },
    301: {
        "en": "Polynomial {} could not be certified irreducible after {} specializations",
        "pt": "Polinômio {} não pôde ser certificado irredutível após {} especializações",
    },
    302: {
        "en": "Unsupported inseparable step {}: must be X^p - b, with b in the p-basis {}",
        "pt": "Passo inseparável {} não suportado: deve ser X^p - b, com b na p-base {}",
    },
    303: {
        "en": "Tower degree {} exceeds the cap {}",
        "pt": "Grau {} da torre excede o limite {}",
    },
    304: {
        "en": "Division by zero in {}",
        "pt": "Divisão por zero em {}",
    },
    305: {
        "en": "Elements belong to different fields {} and {}",
        "pt": "Elementos pertencem a corpos distintos {} e {}",
    },
    306: {
        "en": "Field {} is not a simple extension of {}",
        "pt": "Corpo {} não é extensão simples de {}",
    },
    307: {
        "en": "The zero subspace has no stabilizer",
        "pt": "O subespaço nulo não possui estabilizador",
    },
    308: {
        "en": "Form {} is singular",
        "pt": "Forma {} é singular",
    },
    309: {
        "en": "Dimension mismatch: {} and {}",
        "pt": "Dimensões incompatíveis: {} e {}",
    },
    310: {
        "en": "Nonsingular part has odd dimension {}",
        "pt": "Parte não singular possui dimensão ímpar {}",
    },
    311: {
        "en": "Similarity factor must be nonzero",
        "pt": "Fator de similaridade deve ser não nulo",
    },
    312: {
        "en": "Extension {} is inseparable",
        "pt": "Extensão {} é inseparável",
    },
    313: {
        "en": "Could not generate a certified instance for {} within {} attempts",
        "pt": "Não foi possível gerar instância certificada para {} em {} tentativas",
    },
    314: {
        "en": "Search of size {} exceeds the bound {}",
        "pt": "Busca de tamanho {} excede o limite {}",
    },
    315: {
        "en": "Syntax error at line {}, column {}: {}",
        "pt": "Erro de sintaxe na linha {}, coluna {}: {}",
    },
    316: {
        "en": "Unknown identifier {} at line {}",
        "pt": "Identificador {} desconhecido na linha {}",
    },
    317: {
        "en": "Type mismatch at line {}: {}",
        "pt": "Tipos incompatíveis na linha {}: {}",
    },
    318: {
        "en": "Matrix {} is not square and symmetric",
        "pt": "Matriz {} não é quadrada e simétrica",
    },
    319: {
        "en": "Unknown suite {}",
        "pt": "Suíte {} desconhecida",
    },
    320: {
        "en": "Characteristic {} is not supported by {}",
        "pt": "Característica {} não suportada por {}",
    },
    321: {
        "en": "Name {} is already in use in {}",
        "pt": "Nome {} já está em uso em {}",
    },
    322: {
        "en": "Form {} is not totally singular",
        "pt": "Forma {} não é totalmente singular",
    }
}

_ERR_MSGS_EN: Final[dict[int, str]] = {key: value["en"] for key, value in __ERR_MSGS.items()}
_ERR_MSGS_PT: Final[dict[int, str]] = {key: value["pt"] for key, value in __ERR_MSGS.items()}
