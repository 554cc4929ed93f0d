# Export and rendering
