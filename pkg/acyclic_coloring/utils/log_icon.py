icon = {
    "check": "✅",
    "cross": "❌",
    "warning": "⚠️",
    "rocket": "🚀",
    "repeat": "🔁",
    "hourglass": "⏳",
    "lightbulb": "💡",
}
