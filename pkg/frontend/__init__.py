"""
前端模块 — 命令行与状态文件编解码
"""
